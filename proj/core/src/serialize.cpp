#include "g1b/serialize.hpp"

namespace g1b {

ojson encode(const Point& P) {
  if (P.infinity) return ojson{{"inf", true}};
  return ojson{{"x", P.x.to_string()}, {"y", P.y.to_string()}};
}

ojson encode(const KummerClass& k) {
  const TameContext& ctx = k.context();
  return ojson{{"p", ctx.p()},
               {"n", ctx.n()},
               {"f", ctx.f()},
               {"v", k.v()},
               {"u", k.unit_rep().to_string()}};
}

ojson encode(const FullLevelCurve& rec, u64 c) {
  return ojson{{"p", rec.p}, {"a4", rec.a4}, {"a6", rec.a6}, {"c", c}};
}

ojson encode(const LevelStructure& ls) {
  ojson j;
  j["p"] = ls.E.field().characteristic();
  j["n"] = ls.basis.n;
  j["a4"] = ls.E.a4().to_string();
  j["a6"] = ls.E.a6().to_string();
  j["T"] = encode(ls.basis.T);
  j["S"] = encode(ls.basis.S);
  j["zeta"] = ls.zeta.to_string();
  j["c"] = ls.c;
  return j;
}

ojson encode(const TwistCertificate& cert) {
  ojson j;
  j["p"] = cert.p;
  j["n"] = cert.n;
  j["delegated_n"] = cert.delegated_n;
  j["ok"] = cert.ok;
  ojson items = ojson::array();
  for (const CertificateItem& it : cert.items)
    items.push_back(ojson{{"condition", it.condition}, {"ok", it.ok}, {"detail", it.detail}});
  j["conditions"] = items;
  if (cert.witness_curve)
    j["witness_curve"] = ojson{{"p", cert.witness_curve->p},
                               {"a4", cert.witness_curve->a4},
                               {"a6", cert.witness_curve->a6}};
  if (cert.symbol_witness)
    j["symbol_witness"] = ojson{{"first", encode(cert.symbol_witness->first)},
                                {"second", encode(cert.symbol_witness->second)}};
  if (cert.symbol_value) j["symbol_value"] = cert.symbol_value->to_string();
  return j;
}

ojson encode(const NoncyclicReport& rep) {
  ojson j;
  j["n"] = rep.n;
  j["exhaustive_ran"] = rep.exhaustive_ran;
  j["cyclic_subgroups_scanned"] = rep.cyclic_subgroups_scanned;
  j["splitting_found"] = rep.splitting_found;
  if (rep.exhaustive_ran) {
    j["max_intersection_order"] = rep.max_intersection_order;
    j["min_complement_order"] = rep.min_complement_order;
  }
  j["counting_branch"] = rep.counting_branch_noncyclic ? "noncyclic" : "inconclusive";
  j["branches_agree"] = rep.branches_agree;
  return j;
}

ojson envelope(const std::string& command, ojson inputs, u64 seed) {
  ojson j;
  j["schema"] = 1;
  j["command"] = command;
  j["inputs"] = std::move(inputs);
  j["seed"] = seed;
  return j;
}

std::string dump_json(const ojson& j) { return j.dump(2) + "\n"; }

}  // namespace g1b
