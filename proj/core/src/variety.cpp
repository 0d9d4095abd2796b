#include "diffop/variety.hpp"

namespace diffop {

RingPtr ring_from_variety(const VarietyFile& vf) {
  return CoordinateRing::create(vf.variables, vf.generators, order_from_name(vf.order));
}

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = {
      {{"cusp", {"x", "y"}, {"x^3 - y^2"}, "degrevlex"}, {1, 1, false, 1}},
      {{"node", {"x", "y"}, {"y^2 - x^3 - x^2"}, "degrevlex"}, {1, 1, false, 1}},
      {{"circle", {"x", "y"}, {"x^2 + y^2 - 1"}, "degrevlex"}, {1, 1, true, 1}},
      {{"twisted_cubic", {"x", "y", "z"}, {"y - x^2", "z - x^3"}, "degrevlex"},
       {2, 1, true, 1}},
      {{"whitney_umbrella", {"x", "y", "z"}, {"x^2 - y^2*z"}, "degrevlex"},
       {1, 2, false, 3}},
      {{"coordinate_subspace_1_2", {"x", "y"}, {"x"}, "degrevlex"}, {1, 1, true, 1}},
      {{"coordinate_subspace_2_4", {"x1", "x2", "x3", "x4"}, {"x1", "x2"}, "degrevlex"},
       {2, 2, true, 2}},
      {{"double_cusp", {"x", "y", "u", "v"}, {"x^3 - y^2", "u^3 - v^2"}, "degrevlex"},
       {2, 2, false, 4}},
  };
  return entries;
}

const CatalogEntry* catalog_find(const std::string& name) {
  for (const CatalogEntry& e : catalog())
    if (e.variety.name == name) return &e;
  return nullptr;
}

}  // namespace diffop
