#pragma once

#include <string>
#include <vector>

#include "hsumset/catalog.hpp"

namespace hsumset::catalog::detail {

struct CaseSpec {
  std::string label;
  std::string when;
  std::string formula;
  /// Formula as printed, when it differs from `formula`.
  std::string printed = {};
  std::string note = {};
};

struct FamilySpec {
  std::string id;
  std::string shape;
  int extension;
  std::string params;
  HRegime regime;
  std::string k_min;
  std::string domain;
  std::string deleted;
  std::string dual;
  std::vector<CaseSpec> cases;
};

const std::vector<FamilySpec>& family_specs();

}  // namespace hsumset::catalog::detail
