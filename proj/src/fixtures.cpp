#include "rlat/fixtures.hpp"

#include "rlat/construct.hpp"

namespace rlat::fixtures {

namespace {

Table from_rows(const std::vector<std::vector<int>>& rows) {
  Table t(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows.size(); ++j)
      t.at(static_cast<Elem>(i), static_cast<Elem>(j)) = static_cast<Elem>(rows[i][j]);
  return t;
}

}  // namespace

Algebra ex5() {
  RawTables raw;
  raw.name = "EX5";
  raw.labels = {"0", "a", "b", "c", "1"};
  raw.join = from_rows({{0, 1, 2, 3, 4},
                        {1, 1, 3, 3, 4},
                        {2, 3, 2, 3, 4},
                        {3, 3, 3, 3, 4},
                        {4, 4, 4, 4, 4}});
  raw.mult = from_rows({{0, 0, 0, 0, 0},
                        {0, 1, 0, 1, 1},
                        {0, 0, 2, 2, 2},
                        {0, 1, 2, 3, 3},
                        {0, 1, 2, 3, 4}});
  raw.imp = from_rows({{4, 4, 4, 4, 4},
                       {2, 4, 2, 4, 4},
                       {1, 1, 4, 4, 4},
                       {0, 1, 2, 4, 4},
                       {0, 1, 2, 3, 4}});
  return make_algebra(std::move(raw));
}

Algebra c3() { return godel_chain(3).with_name("C3"); }

Algebra l3() { return lukasiewicz_chain(3).with_name("L3"); }

Algebra b4() { return boolean_algebra(2).with_name("B4"); }

Algebra b2() { return boolean_algebra(1).with_name("B2"); }

std::vector<Algebra> all() { return {c3(), ex5(), b4(), l3()}; }

}  // namespace rlat::fixtures
