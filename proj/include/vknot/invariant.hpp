// A named diagram -> value map, optionally restricted to one diagram kind.
// Values must form an abelian group under +, - with a default-constructed
// zero (long long and LaurentPoly both qualify).

#pragma once

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>

#include "vknot/gauss_diagram.hpp"

namespace vknot {

class InvariantError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

template <class V>
struct Invariant {
  std::string name;
  std::function<V(const GaussDiagram&)> fn;
  std::optional<Kind> required_kind;

  V operator()(const GaussDiagram& d) const {
    if (required_kind && d.kind() != *required_kind)
      throw InvariantError(name + " applies to " + to_string(*required_kind) + " diagrams only");
    return fn(d);
  }
};

using IntInvariant = Invariant<long long>;

}  // namespace vknot
