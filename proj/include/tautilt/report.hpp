// Deterministic JSON reports: identical inputs and seed produce byte-identical
// output. Witness modules are embedded in `.mod` text form.
#pragma once

#include <json.hpp>
#include <string>

#include "tautilt/dell.hpp"
#include "tautilt/formats.hpp"

namespace tautilt {

using Json = nlohmann::ordered_json;

inline const char* tool_version() { return "0.1.0"; }

inline Json to_json(const VanishingVerdict& v) {
  Json j;
  switch (v.status) {
    case VanishingVerdict::Status::Holds:
      j["status"] = "holds";
      j["certificate"] = v.cert == VanishingVerdict::Cert::FinitePd ? "finite-pd" : "periodic";
      if (v.cert == VanishingVerdict::Cert::FinitePd)
        j["pd"] = v.pd;
      else
        j["period"] = Json{{"from", v.period_lo}, {"to", v.period_hi}};
      break;
    case VanishingVerdict::Status::Fails:
      j["status"] = "fails";
      j["degree"] = v.fail_degree;
      j["dimension"] = v.fail_dim;
      break;
    case VanishingVerdict::Status::Unknown:
      j["status"] = "unknown-beyond-horizon";
      break;
  }
  j["horizon"] = v.horizon;
  return j;
}

inline Json to_json(const PdResult& pd) {
  Json j;
  if (pd.finite) {
    j["finite"] = true;
    j["value"] = pd.value;
  } else {
    j["finite"] = false;
    j["at_least"] = pd.horizon;
  }
  return j;
}

template <class S>
Json to_json(const ClassificationReport<S>& r) {
  Json j;
  j["id"] = r.id;
  j["dim"] = r.dim;
  j["faithful"] = r.faithful;
  j["rigid"] = r.rigid;
  j["tau_rigid"] = r.tau_rigid;
  j["partial_one_tilting"] = r.partial_one_tilting;
  j["one_tilting"] = r.one_tilting;
  j["tau_tilting"] = r.tau_tilting;
  j["support_tau_tilting"] = r.support_tau_tilting;
  j["self_orthogonal"] = to_json(r.self_orthogonal);
  j["ann_dim"] = r.ann_dim;
  j["ann_nilpotent"] = r.ann_nilpotent;
  if (r.summand_count)
    j["summand_count"] = *r.summand_count;
  else
    j["summand_count"] = nullptr;
  j["total_multiplicity"] = r.total_multiplicity;
  j["quotient_simple_count"] = r.quotient_simple_count;
  j["tensor_ann_dim"] = r.tensor_ann_dim;
  j["tor1_ann_dim"] = r.tor1_ann_dim;
  j["ext2_to_dual_quotient_dim"] = r.ext2_to_dabar_dim;
  j["pd"] = to_json(r.pd);
  j["uncertain"] = r.uncertain;
  return j;
}

inline Json to_json(const TheoremVerdict& v) {
  Json j;
  j["id"] = v.id;
  j["applicable"] = v.applicable;
  j["consistent"] = v.consistent;
  Json conds = Json::object();
  for (const auto& [name, val] : v.conditions) conds[name] = val;
  j["conditions"] = conds;
  if (!v.note.empty()) j["note"] = v.note;
  return j;
}

template <class S>
Json to_json(const DellResult<S>& r, const std::string& algebra_name) {
  Json j;
  j["bounded"] = r.bounded();
  if (r.bounded()) {
    j["level"] = r.level;
    j["exact"] = r.exact;
    if (r.witness)
      j["witness_mod"] = write_module_file(*r.witness, "witness", algebra_name);
    else
      j["witness_mod"] = nullptr;  // the reduced syzygy vanished, any N works
  }
  j["reduced_syzygy_dims"] = r.reduced_syzygy_dims;
  j["scope"] = r.scope;
  return j;
}

}  // namespace tautilt
