#pragma once

#include <stdexcept>
#include <string>

namespace bici {

/// Malformed or out-of-range input (bad ambient, bad bidegree list, bad prime).
class InvalidInput : public std::invalid_argument {
public:
  explicit InvalidInput(const std::string& what) : std::invalid_argument(what) {}
};

/// A computation that is only valid for ACM complete intersections was asked
/// to run on a spec that fails one of the criteria.
class NotAcm : public std::domain_error {
public:
  explicit NotAcm(const std::string& what) : std::domain_error(what) {}
};

/// A Grassmannian level with fewer independent forms than it has to choose.
class InfeasibleTower : public std::domain_error {
public:
  explicit InfeasibleTower(const std::string& what) : std::domain_error(what) {}
};

}  // namespace bici
