#ifndef QMV_VALUE_HPP
#define QMV_VALUE_HPP

#include <cstddef>
#include <string>
#include <variant>
#include <vector>

#include "qmv/rational.hpp"

namespace qmv {

struct Value;
using ValueList = std::vector<Value>;

/// One element of some quantale's carrier: a scalar for analytic instances,
/// an index into the element table for finite instances, or a tuple for
/// products.
struct Value {
  std::variant<Rat, std::size_t, ValueList> v;

  Value() : v(Rat(0)) {}
  Value(Rat r) : v(std::move(r)) {}
  explicit Value(std::size_t i) : v(i) {}
  Value(ValueList t) : v(std::move(t)) {}

  bool is_scalar() const { return std::holds_alternative<Rat>(v); }
  bool is_index() const { return std::holds_alternative<std::size_t>(v); }
  bool is_tuple() const { return std::holds_alternative<ValueList>(v); }

  const Rat& scalar() const { return std::get<Rat>(v); }
  std::size_t index() const { return std::get<std::size_t>(v); }
  const ValueList& tuple() const { return std::get<ValueList>(v); }

  bool operator==(const Value& o) const { return v == o.v; }
  bool operator!=(const Value& o) const { return !(*this == o); }
};

} // namespace qmv

#endif
