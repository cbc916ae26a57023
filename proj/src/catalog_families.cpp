// Deletion-family cardinality table. Each case is the domain condition and
// the closed form for |h^A| in the variables h, k and the family parameters.
// Conditions use the grammar of expr::Condition: '&' conjunction, '|'
// alternatives, `v in [lo,hi]`, `v in {a,b}`, relation chains.

#include <stdexcept>

#include "catalog_internal.hpp"

namespace hsumset::catalog::detail {

namespace {

using R = HRegime;

std::vector<FamilySpec> build_specs() {
  std::vector<FamilySpec> f;

  // [0,k] \ {x}
  f.push_back({"one-deletion", "{x}", 0, "x", R::AtLeastThree, "3h+1", "x in [1,k-1]", "x", "one-deletion",
               {
                   {"i", "x in [1,h-1]", "hk-h^2+x+1"},
                   {"ii", "x in [k-h+1,k-1]", "(h+1)k-h^2-x+1"},
                   {"iii", "x in {h,k-h}", "hk-h^2+h"},
                   {"iv", "x in [h+1,k-h-1]", "hk-h^2+h+1"},
               }});

  // [0,k+1] \ {x,x+1}
  f.push_back({"pair-adjacent", "{x,x+1}", 1, "x", R::AtLeastThree, "3h+3", "x in [1,k-1]", "x,x+1",
               "pair-adjacent",
               {
                   {"i", "x in [1,h-1]", "hk-h^2+2x+1"},
                   {"ii", "x in [k-h+1,k-1]", "(h+2)k-h^2-2x+1"},
                   {"iii", "x in {h,k-h}", "hk-h^2+2h-1"},
                   {"iv", "x in [h+1,k-h-1]", "hk-h^2+2h+1"},
               }});

  // [0,k+1] \ {x,x+2}
  f.push_back({"pair-gap2", "{x,x+2}", 1, "x", R::AtLeastThree, "3h+3", "x in [1,k-2]", "x,x+2", "pair-gap2",
               {
                   {"i", "x in [1,h-2]", "hk-h^2+2x+2"},
                   {"ii", "x in [k-h+1,k-2]", "(h+2)k-h^2-2x"},
                   {"iii", "x in {h-1,k-h}", "hk-h^2+2h-1"},
                   {"iv", "x in {h,k-h-1}", "hk-h^2+2h"},
                   {"v", "x in [h+1,k-h-2]", "hk-h^2+2h+1"},
               }});

  // [0,k+1] \ {x,k}
  f.push_back({"pair-x-k", "{x,k}", 1, "x", R::AtLeastThree, "3h+3", "x in [1,k-3]", "x,k", "pair-1-y",
               {
                   {"i", "x in [1,h-1]", "hk-h^2+x+2"},
                   {"ii", "x in {h,k-h}", "hk-h^2+h+1"},
                   {"iii", "x in [h+1,k-h-1]", "hk-h^2+h+2"},
                   {"iv", "x in [k-(h-1),k-3]", "(h+1)k-h^2-x+2"},
               }});

  // [0,k+1] \ {1,y}
  f.push_back({"pair-1-y", "{1,y}", 1, "y", R::AtLeastThree, "3h+3", "y in [4,k]", "1,y", "pair-x-k",
               {
                   {"i", "y in [k-(h-2),k]", "(h+1)k-h^2-y+3"},
                   {"ii", "y in {h+1,k-(h-1)}", "hk-h^2+h+1"},
                   {"iii", "y in [h+2,k-h]", "hk-h^2+h+2"},
                   {"iv", "y in [4,h]", "hk-h^2+y+1", "(h-1)k-h^2+y+1",
                    "reflection of pair-x-k case iv"},
               }});

  // [0,k+1] \ {x,k-1}
  f.push_back({"pair-x-km1", "{x,k-1}", 1, "x", R::AtLeastThree, "3h+3", "x in [1,k-4]", "x,k-1", "pair-2-y",
               {
                   {"i", "x in [1,h-1]", "hk-h^2+x+3"},
                   {"ii", "x in {h,k-h}", "hk-h^2+h+2"},
                   {"iii", "x in [h+1,k-h-2]", "hk-h^2+h+3"},
                   {"iv.1", "x = k-h-1 & h >= 4", "hk-h^2+h+3"},
                   {"iv.2", "x = k-h-1 & h = 3", "3k-4"},
                   {"v", "x in [k-h+1,k-4]", "(h+1)k-h^2-x+3"},
               }});

  // [0,k+1] \ {2,y}
  f.push_back({"pair-2-y", "{2,y}", 1, "y", R::AtLeastThree, "3h+3", "y in [5,k]", "2,y", "pair-x-km1",
               {
                   {"i", "y in [k-(h-2),k]", "hk-h^2+k-y+4"},
                   {"ii", "y in {h+1,k-(h-1)}", "hk-h^2+h+2"},
                   {"iii", "y in [h+3,k-h]", "hk-h^2+h+3"},
                   {"iv.1", "y = h+2 & h >= 4", "hk-h^2+h+3", "", "condition printed as x=h+2; the parameter is y"},
                   {"iv.2", "y = h+2 & h = 3", "3k-4", "", "condition printed as x=h+2; the parameter is y"},
                   {"v", "y in [5,h]", "hk-h^2+y+2"},
               }});

  // [0,k+1] \ {x,y}, x,y in [3,k-2], y-x >= 3
  f.push_back({"general-pair", "{x,y}", 1, "xy", R::AtLeastThree, "3h+3",
               "x in [3,k-2] & y in [3,k-2] & y-x >= 3", "x,y", "general-pair",
               {
                   {"i", "h >= 6 & x in [3,h-3] & y in [6,h]", "hk-h^2+x+y"},
                   {"ii", "h >= 5 & x in [3,h-2] & y = h+1", "hk-h(h-1)+x"},
                   {"iii", "h >= 4 & x in [3,h-1] & y in [h+2,k-h]", "hk-h(h-1)+x+1"},
                   {"iv", "h >= 4 & x in [3,h-1] & y = k-h+1", "hk-h(h-1)+x"},
                   {"v", "h >= 4 & x in [3,h-1] & y in [k-(h-2),k-2]", "(h+1)k-h^2+x-y+2"},
                   {"vi", "x = h & y in [h+3,k-h] | x in [h+1,k-h-2] & y = k-h+1", "hk-h^2+2h"},
                   {"vii", "x = h & y = k-h+1", "hk-h^2+2h-1"},
                   {"viii", "h >= 4 & x = h & y in [k-h+2,k-2]", "(h+1)k-h(h-1)-y+1"},
                   {"ix", "x in [h+1,k-h-3] & y in [h+4,k-h]", "hk-h^2+2h+1"},
                   {"x", "h >= 4 & x in [h+1,k-h-1] & y in [k-h+2,k-2]", "(h+1)k-h(h-1)-y+2"},
                   {"xi", "h >= 5 & x = k-h & y in [k-h+3,k-2]", "(h+1)k-h(h-1)-y+1"},
                   {"xii", "h >= 6 & x in [k-h+1,k-5] & y in [k-h+4,k-2]", "(h+2)k-h^2-x-y+2"},
               }});

  // [0,k+2] \ {x,x+1,x+2}
  f.push_back({"triple-consecutive", "{x,x+1,x+2}", 2, "x", R::AtLeastThree, "3h+4", "x in [1,k-1]", "x,x+1,x+2",
               "triple-consecutive",
               {
                   {"i", "x in [1,h-1]", "hk-h^2+3x+1"},
                   {"ii", "x in [k-h+1,k-1]", "(h+3)k-h^2-3x+1"},
                   {"iii", "x in {h,k-h}", "hk-h^2+3h-2"},
                   {"iv.1", "x in {h+1,k-h-1} & h = 3", "3k"},
                   {"iv.2", "x in {h+1,k-h-1} & h >= 4", "hk-h^2+3h+1"},
                   {"v", "x in [h+2,k-h-2]", "hk-h^2+3h+1"},
               }});

  // h = 3: [0,k+2] \ {x,x+1,z}
  f.push_back({"h3-adjacent-first", "{x,x+1,z}", 2, "xz", R::ExactlyThree, "13",
               "x in [2,k-3] & z in [5,k] & z-x >= 3", "x,x+1,z", "h3-adjacent-last",
               {
                   {"i", "x = 2 & z in {5,6,7,k-1,k}", "3k-2"},
                   {"ii", "x = 2 & z in [8,k-2]", "3k-1"},
                   {"iii", "x = 3 & z in {k-1,k}", "3k-2"},
                   {"iv", "x = 3 & z in [6,k-2]", "3k-1", "3k",
                    "reflection of h3-adjacent-last case iv; 4 and 5 are not sums"},
                   {"v", "x in [4,k-4] & z = k-1", "3k"},
                   {"vi", "x in [4,k-5] & z = k", "3k"},
                   {"vii.1", "x = k-4 & z = k", "3k-1"},
                   {"vii.2", "x = k-3 & z = k", "3k-2"},
                   {"viii", "x in [4,k-5] & z in [7,k-2]", "3k+1"},
               }});

  // h = 3: [0,k+2] \ {x,y,y+1}
  f.push_back({"h3-adjacent-last", "{x,y,y+1}", 2, "xy", R::ExactlyThree, "13",
               "x in [2,k-3] & y in [4,k-1] & y-x >= 2", "x,y,y+1", "h3-adjacent-first",
               {
                   {"i", "x in {2,3,k-5,k-4,k-3} & y = k-1", "3k-2"},
                   {"ii", "x in [4,k-6] & y = k-1", "3k-1"},
                   {"iii", "x in {2,3} & y = k-2", "3k-2"},
                   {"iv", "x in [4,k-4] & y = k-2", "3k-1"},
                   {"v", "x = 3 & y in [5,k-3]", "3k"},
                   {"vi", "x = 2 & y in [6,k-3]", "3k"},
                   {"vii.1", "x = 2 & y = 5", "3k-1"},
                   {"vii.2", "x = 2 & y = 4", "3k-2"},
                   {"viii", "x in [4,k-5] & y in [6,k-3]", "3k+1"},
               }});

  // h = 3: [0,k+2] \ {x,y,z}, gaps >= 2. Cases i-iv hold for k >= 13; the
  // reflected cases r.i-r.iii are stated for k >= 11.
  f.push_back({"h3-general-triple", "{x,y,z}", 2, "xyz", R::ExactlyThree, "13",
               "2 <= x & y-x >= 2 & z-y >= 2 & z <= k", "x,y,z", "h3-general-triple",
               {
                   {"i", "x = 2 & y = 4 & z = 6 | x = 2 & y = 4 & z = k-1 | x = 2 & y = 4 & z = k"
                         " | x = 2 & y = 5 & z = k-1 | x = 2 & y = 5 & z = k",
                    "3k-2"},
                   {"ii", "x = 2 & y = 4 & z in [7,k-2] | x = 2 & y = 5 & z in [7,k-2]"
                          " | x = 2 & y in [6,k-3] & z = k-1 | x = 2 & y in [6,k-4] & z = k"
                          " | x = 3 & y in [5,k-3] & z = k-1",
                    "3k-1"},
                   {"iii", "5 <= x+1 < y <= k-4 & z = k | x = 3 & 6 <= y+1 < z <= k-2", "3k"},
                   {"iv", "4 <= x < y < z <= k-2", "3k+1"},
                   {"r.i", "k >= 11 & (x = k-4 & y = k-2 & z = k | x = 3 & y = k-2 & z = k"
                           " | x = 2 & y = k-2 & z = k | x = 2 & y = k-3 & z = k | x = 3 & y = k-3 & z = k)",
                    "3k-2"},
                   {"r.ii", "k >= 11 & (x in [4,k-5] & y = k-2 & z = k | x in [4,k-5] & y = k-3 & z = k"
                            " | x = 3 & y in [5,k-4] & z = k)",
                    "3k-1"},
                   {"r.iii", "k >= 11 & (x = 2 & 7 <= y+1 < z <= k-2 | 5 <= x+1 < y <= k-3 & z = k-1)", "3k"},
               }});

  // h = 3: [0,k+2] \ {1,y,z}
  f.push_back({"h3-one-first", "{1,y,z}", 2, "yz", R::ExactlyThree, "13", "2 <= y < z <= k+1", "1,y,z",
               "h3-last-k1",
               {
                   {"i", "y = 2 & z = k+1", "3k-5"},
                   {"ii", "y = 2 & z in {4,5,k-1,k} | y in {3,4} & z = k+1", "3k-4"},
                   {"iii", "y = 3 & z in {4,5,6,k-1,k} | y = 4 & z in {5,k-1,k} | y = k-1 & z = k"
                           " | y = k-2 & z = k-1 | y = k-3 & z = k | y = k-2 & z = k | y = 2 & z in [6,k-2]"
                           " | y in [5,k-3] & z = k+1",
                    "3k-3"},
                   {"iv", "y = 5 & z = 6 | y = 3 & z in [7,k-2] | y = 4 & z in [6,k-2] | y in [5,k-3] & z = k-1"
                          " | y in [5,k-4] & z = k",
                    "3k-2"},
                   {"v", "y in [6,k-3] & z = y+1 | 6 <= y+1 < z <= k-2", "3k-1"},
               }});

  // h = 3: [0,k+2] \ {x,y,k+1}
  f.push_back({"h3-last-k1", "{x,y,k+1}", 2, "xy", R::ExactlyThree, "11", "1 <= x < y <= k", "x,y,k+1",
               "h3-one-first",
               {
                   {"i", "x = 1 & y = k", "3k-5"},
                   {"ii", "x in {k-2,k-3,3,2} & y = k | x = 1 & y in {k-1,k-2}", "3k-4"},
                   {"iii", "x in {k-2,k-3,k-4,3,2} & y = k-1 | x in {k-3,3,2} & y = k-2 | x = 2 & y in {3,4,5}"
                           " | x = 3 & y = 4 | x in [4,k-4] & y = k | x = 1 & y in [5,k-3]",
                    "3k-3"},
                   {"iv", "x = k-4 & y = k-3 | x in [4,k-5] & y = k-1 | x in [4,k-4] & y = k-2"
                          " | x = 3 & y in [5,k-3] | x = 2 & y in [6,k-3]",
                    "3k-2"},
                   {"v", "x in [4,k-5] & y = x+1 | 5 <= x+1 < y <= k-3", "3k-1"},
               }});

  // h >= 4: [0,k+2] \ {x,x+1,k+1}
  f.push_back({"h4-adjacent-k1", "{x,x+1,k+1}", 2, "x", R::AtLeastFour, "3h+4", "x in [1,k-1]", "x,x+1,k+1",
               "h4-one-adjacent",
               {
                   {"i", "x in [1,h-1]", "hk-h^2+2x+2"},
                   {"ii", "x in {h,k-h}", "hk-h^2+2h"},
                   {"iii", "x in [h+1,k-h-1]", "hk-h^2+2h+2"},
                   {"iv", "x in [k-(h-1),k-1]", "(h+2)k-h^2-2x+2"},
               }});

  // h >= 4: [0,k+2] \ {1,y,y+1}
  f.push_back({"h4-one-adjacent", "{1,y,y+1}", 2, "y", R::AtLeastFour, "3h+2", "y in [2,k]", "1,y,y+1",
               "h4-adjacent-k1",
               {
                   {"i", "y in [k-(h-2),k]", "hk-h^2+2(k+1-y)+2", "hk-h^2+2(k+1-y)",
                    "reflection of h4-adjacent-k1 case i"},
                   {"ii", "y in {h+1,k-h+1}", "hk-h^2+2h"},
                   {"iii", "y in [h+2,k-h]", "hk-h^2+2h+2"},
                   {"iv", "y in [2,h]", "hk-h^2+2y"},
               }});

  // h >= 4: [0,k+2] \ {x,x+1,z}
  f.push_back({"h4-adjacent-first", "{x,x+1,z}", 2, "xz", R::AtLeastFour, "3h+4", "2 <= x & z <= k & z-x >= 3",
               "x,x+1,z", "h4-adjacent-last",
               {
                   {"i", "x in [2,h-2] & z in [5,h+1]", "hk-h^2+2x+z-1"},
                   {"ii.1", "x in [2,h-1] & z = h+2", "hk-h(h-1)+2x"},
                   {"ii.2", "x in [2,h-2] & z in [h+3,k-h+1]", "hk-h(h-1)+2x+1"},
                   {"ii.3", "x = h-1 & z in {h+3,h+4}", "hk-h(h-3)-2"},
                   {"ii.4", "x = h-1 & z in [h+5,k-h+1]", "hk-h(h-3)-1"},
                   {"iii", "x = h & z in [h+3,k-h+1]", "hk-h(h-3)-1"},
                   {"iv.1", "x in [2,h-1] & z = k-h+2", "hk-h(h-1)+2x"},
                   {"iv.2", "x = h & z = k-h+2", "hk-h(h-3)-2"},
                   {"v.1", "x in [2,h-1] & z in [k-h+3,k]", "(h+1)k-h^2+2x-z+3"},
                   {"v.2", "x = h & z in [k-h+3,k]", "(h+1)k-h(h-2)-z+1"},
                   {"vi.1", "x in [h+1,k-h-1] & z in [h+4,k-h+1]", "hk-h(h-3)+1"},
                   {"vi.2", "x in [h+1,k-h-1] & z = k-h+2", "hk-h(h-3)"},
                   {"vii.1", "x in [h+1,k-h-1] & z in [k-h+3,k]", "(h+1)k-h(h-2)-z+3"},
                   {"vii.2", "x = k-h & z in [k-h+3,k]", "(h+1)k-h(h-2)-z+1"},
                   {"viii", "x in [k-h+1,k-3] & z in [k-h+4,k]", "(h+3)k-h^2-(2x+z)+3"},
               }});

  // h >= 4: [0,k+2] \ {x,y,y+1}
  f.push_back({"h4-adjacent-last", "{x,y,y+1}", 2, "xy", R::AtLeastFour, "3h+4", "2 <= x & y <= k-1 & y-x >= 2",
               "x,y,y+1", "h4-adjacent-first",
               {
                   {"i", "x in [k-h+1,k-3] & y in [k-h+3,k-1]", "(h+3)k-h^2-(x+2y)+3"},
                   {"ii.1", "x = k-h & y in [k-h+2,k-1] | x in [k-h-2,k-h-1] & y = k-h+2", "(h+2)k-h(h-1)-2y+2", "",
                    "printed as x=k-h, y=k-h+2 (h>=5) and x in {k-h-1,k-h}, y=k-h+2 (h=4); domain taken from the "
                    "reflection of h4-adjacent-first cases ii.1 and ii.3"},
                   {"ii.2", "x in [h+1,k-h-1] & y in [k-h+3,k-1] | x in [h+1,k-h-3] & y = k-h+2",
                    "(h+2)k-h(h-1)-2y+3", "", "complement of ii.1 within case ii"},
                   {"iii", "x in [h+1,k-h-1] & y = k-h+1", "hk-h(h-3)-1"},
                   {"iv.1", "x = h & y in [k-h+2,k-1]", "(h+2)k-h(h-1)-2y+2"},
                   {"iv.2", "x = h & y = k-h+1", "hk-h(h-3)-2"},
                   {"v.1", "x in [2,h-1] & y in [k-h+2,k-1]", "(h+2)k-h^2+x-2y+3"},
                   {"v.2", "x in [2,h-1] & y = k-h+1", "hk-h(h-2)+x-1"},
                   {"vi.1", "x in [h+1,k-h-2] & y in [h+2,k-h]", "hk-h^2+3h+1"},
                   {"vi.2", "x = h & y in [h+2,k-h]", "hk-h^2+3h"},
                   {"vii.1", "x in [2,h-1] & y in [h+2,k-h]", "hk-h(h-2)+x+1"},
                   {"vii.2", "x in [2,h-1] & y = h+1", "hk-h(h-2)+x-1"},
                   {"viii", "x in [2,h-2] & y in [4,h]", "hk-h^2+x+2y-1"},
               }});

  // h >= 4: [0,k+2] \ {x,y,z}, gaps >= 2
  f.push_back({"h4-general-triple", "{x,y,z}", 2, "xyz", R::AtLeastFour, "3h+4",
               "2 <= x & y-x >= 2 & z-y >= 2 & z <= k", "x,y,z", "h4-general-triple",
               {
                   {"i", "z <= h+1", "hk-h^2+(x+y+z)-2"},
                   {"ii", "k-h+1 <= x", "(h+3)k-h^2-(x+y+z)+4"},
                   {"iii.1", "x in [2,h-2] & y in [4,h+1] & z in [k-(h-3),k]", "(h+1)k-h^2+(x+y-z)+2"},
                   {"iii.2", "x = h-1 & y = h+1 & z in [k-(h-3),k]", "(h+1)k-h(h-2)-z+1"},
                   {"iv.1", "x in [2,h-2] & y in [4,h] & z in [h+2,k-(h-1)]", "hk-h(h-1)+x+y"},
                   {"iv.2", "x in [2,h-2] & y in [4,h] & z = k-(h-2)", "hk-h(h-1)+x+y-1"},
                   {"v", "x in [2,h-1] & y in [k-(h-2),k-2] & z in [k-(h-4),k]", "(h+2)k-h^2+(x-y-z)+4"},
                   {"vi.1", "x in [2,h-1] & y in [h+2,k-h] & z in [k-(h-3),k]", "(h+1)k-h(h-1)+(x-z)+3"},
                   {"vi.2", "x in [2,h-1] & y in {h+1,k-(h-1)} & z in [k-(h-3),k]", "(h+1)k-h(h-1)+(x-z)+2"},
                   {"vii.1", "x in [2,h-1] & y = h+1 & z = k-(h-2)", "hk-h(h-2)+x-1"},
                   {"vii.2", "x in [2,h-1] & y in [h+2,k-h] & z = k-(h-2)", "hk-h(h-2)+x"},
                   {"viii.1", "x = h-1 & y = h+1 & z = h+3", "hk-h(h-3)-2"},
                   {"viii.2", "x = h-1 & y = h+1 & z = k-(h-1)", "hk-h(h-3)+1"},
                   {"viii.3", "x in [2,h-1] & y = h+1 & z in [h+4,k-(h-1)]", "hk-h(h-2)+x"},
                   {"viii.4", "x in [2,h-1] & y in [h+2,k-h-2] & z in [h+4,k-(h-1)]", "hk-h(h-2)+x+1"},
                   {"ix.1", "x = h & y in [h+2,k-h] & z in [k-(h-3),k]", "(h+1)k-h(h-2)-z+2"},
                   {"ix.2", "x = h & y in [h+2,k-h] & z = k-(h-2)", "hk-h(h-3)-1"},
                   {"ix.3", "x = h & y in [h+2,k-h] & z in [h+4,k-(h-1)]", "hk-h(h-3)"},
                   {"x.1", "x = h & y = k-(h-1) & z = k-(h-3)", "hk-h(h-3)-2"},
                   {"x.2", "x = h & y = k-(h-1) & z in [k-(h-4),k]", "(h+1)k-h(h-2)-z+1"},
                   {"x.3", "x = h & y = k-(h-2) & z = k-(h-4)", "hk-h(h-3)-3"},
                   {"x.4", "x = h & y = k-(h-2) & z in [k-(h-5),k]", "(h+1)k-h(h-2)-z+1"},
                   {"x.5", "x = h & y in [k-(h-3),k-2] & z in [k-(h-5),k]", "(h+2)k-h(h-1)-(y+z)+3"},
                   {"xi.1", "x = k-(h+1) & y = k-(h-1) & z = k-(h-3)", "hk-h(h-3)-2"},
                   {"xi.2", "x in [h+1,k-(h+2)] & y = k-(h-1) & z = k-(h-3)", "hk-h(h-3)-1"},
                   {"xi.3", "h+1 <= x & y <= k-h & z in [k-(h-3),k]"
                            " | x in [h+1,k-h-1] & y = k-(h-1) & z in [k-(h-4),k]",
                    "(h+1)k-h(h-2)-z+3"},
                   {"xii.1", "x = k-h & y in [k-(h-2),k] & z in [k-(h-2),k]", "(h+2)k-h(h-1)-(y+z)+3"},
                   {"xii.2", "x in [h+1,k-h-1] & y in [k-(h-2),k] & z in [k-(h-2),k]", "(h+2)k-h(h-1)-(y+z)+4"},
                   {"xiii.1", "h+1 <= x & z = k-(h-2)", "hk-h(h-3)"},
                   {"xiii.2", "h+1 <= x & z <= k-(h-1)", "hk-h(h-3)+1"},
               }});

  // h >= 4: [0,k+2] \ {1,y,z}
  f.push_back({"h4-one-first", "{1,y,z}", 2, "yz", R::AtLeastFour, "3h+4", "2 <= y & z <= k+1 & z-y >= 2", "1,y,z",
               "h4-last-k1",
               {
                   {"i.1", "y in [2,h-1] & z in [4,h+2]", "hk-h^2-1+(y+z)"},
                   {"i.2", "y = h & z = h+2", "hk-h(h-2)"},
                   {"ii.1", "y in [2,h] & z in [h+3,k-(h-1)]", "hk-h(h-1)+y+1"},
                   {"ii.2", "y in [2,h] & z = k-(h-2)", "hk-h(h-1)+y"},
                   {"ii.3", "y in [2,h] & z in [k-(h-3),k+1]", "hk-h^2+k+3+(y-z)"},
                   {"iii.1", "y = h+1 & z in [k-(h-3),k+1]", "(h+1)k-h(h-1)-z+3"},
                   {"iii.2", "y = h+1 & z = k-(h-2)", "hk-h(h-2)"},
                   {"iv", "y = k-h & z = k-(h-2)", "hk-h(h-2)+1"},
                   {"v.1", "y in [h+2,k-h] & z in [k-(h-3),k+1]", "(h+1)k-h(h-1)-z+4"},
                   {"v.2", "y = k-(h-1) & z in [k-(h-3),k+1]", "(h+1)k-h(h-1)-z+3"},
                   {"vi", "y in [k-(h-2),k-1] & z in [k-(h-4),k+1]", "(h+2)k-h^2-(y+z)+5"},
                   {"vii.1", "y = h+1 & z in [h+3,k-(h-1)]", "hk-h^2+2h+1"},
                   {"vii.2", "y in [h+2,k-(h+1)] & z in [h+3,k-(h-1)]", "hk-h^2+2h+2"},
               }});

  // h >= 4: [0,k+2] \ {x,y,k+1}
  f.push_back({"h4-last-k1", "{x,y,k+1}", 2, "xy", R::AtLeastFour, "3h+2", "1 <= x & y <= k & y-x >= 2", "x,y,k+1",
               "h4-one-first",
               {
                   {"i.1", "x in [k-h,k-2] & y in [k-(h-3),k]", "(h+2)k-h^2-(x+y)+3"},
                   {"i.2", "x = k-h & y = k-(h-2)", "hk-h(h-2)"},
                   {"ii.1", "x in [h+1,k-(h+1)] & y in [k-(h-2),k]", "(h+1)k-h(h-1)-y+3"},
                   {"ii.2", "x = h & y in [k-(h-2),k]", "(h+1)k-h(h-1)-y+2"},
                   {"ii.3", "x in [1,h-1] & y in [k-(h-2),k]", "(h+1)k-h^2+(x-y)+3"},
                   {"iii.1", "x in [1,h-1] & y = k-(h-1)", "hk-h(h-1)+x+1"},
                   {"iii.2", "x = h & y = k-(h-1)", "hk-h(h-2)"},
                   {"iv", "x = h & y = h+2", "hk-h(h-2)+1"},
                   {"v.1", "x in [1,h-1] & y in [h+2,k-h]", "hk-h(h-1)+x+2"},
                   {"v.2", "x in [1,h-1] & y = h+1", "hk-h(h-1)+x+1"},
                   {"vi", "x in [1,h-2] & y in [3,h]", "hk-h^2+(x+y)+1"},
                   {"vii.1", "x in [h+1,k-(h+1)] & y = k-(h-1)", "hk-h^2+2h+1"},
                   {"vii.2", "x in [h+1,k-(h+1)] & y in [h+3,k-h]", "hk-h^2+2h+2"},
               }});

  return f;
}

}  // namespace

const std::vector<FamilySpec>& family_specs() {
  static const std::vector<FamilySpec> specs = build_specs();
  return specs;
}

}  // namespace hsumset::catalog::detail
