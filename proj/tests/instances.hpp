#ifndef QMV_TESTS_INSTANCES_HPP
#define QMV_TESTS_INSTANCES_HPP

#include "qmv/quantale.hpp"

namespace qmv::testing {

// Linear 4-chain 0 <= 1 <= 2 <= 3 in the real order (so 3 is bottom in the
// quantale order), with truncated addition as tensor.
inline QuantalePtr chain4() {
  const std::size_t n = 4;
  std::vector<std::string> names = {"0", "1", "2", "3"};
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n));
  std::vector<std::vector<std::size_t>> tensor(n, std::vector<std::size_t>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      leq[i][j] = i >= j;
      tensor[i][j] = std::min<std::size_t>(i + j, 3);
    }
  return TableQuantale::make("chain4", std::move(names), std::move(leq),
                             std::move(tensor), 0);
}

// Powerset of the two-element group {e, a}.
inline QuantalePtr powerset_z2() {
  return make_powerset_monoid({"e", "a"}, {{0, 1}, {1, 0}}, 0);
}

inline QuantalePtr relations2() { return make_relations({"0", "1"}); }

// Sigma as explicit tables, optionally with tensor(top, top) corrupted to
// bottom (which breaks the unit law at top).
inline std::shared_ptr<const TableQuantale> sigma_tables(bool corrupt) {
  std::vector<std::string> names = {"inf", "0"};
  std::vector<std::vector<bool>> leq = {{true, true}, {false, true}};
  std::vector<std::vector<std::size_t>> tensor = {{0, 0}, {0, 1}};
  if (corrupt) tensor[1][1] = 0;
  return corrupt ? TableQuantale::make_unchecked("sigma_tables", names, leq,
                                                 tensor, 1)
                 : TableQuantale::make("sigma_tables", names, leq, tensor, 1);
}

} // namespace qmv::testing

#endif
