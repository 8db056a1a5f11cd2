#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "coopx/coalition.hpp"
#include "coopx/rational.hpp"

namespace coopx {

/// {x : <normal, x> <= offset} with a nonnegative, nonzero normal.
class HalfSpace {
 public:
  /// Throws Error(InvalidGame) on a negative or all-zero normal.
  HalfSpace(Vector normal, Rational offset);

  const Vector& normal() const { return normal_; }
  const Rational& offset() const { return offset_; }
  std::size_t dimension() const { return normal_.size(); }
  /// <normal, 1>, always positive.
  const Rational& weight() const { return weight_; }

  bool contains(const Vector& x) const { return dot(normal_, x) <= offset_; }
  /// Largest t with x + t*1 inside.
  Rational level(const Vector& x) const { return (offset_ - dot(normal_, x)) / weight_; }

  friend bool operator==(const HalfSpace& a, const HalfSpace& b) {
    return a.normal_ == b.normal_ && a.offset_ == b.offset_;
  }

 private:
  Vector normal_;
  Rational offset_;
  Rational weight_;
};

/// Intersection of half-spaces; closed, convex, comprehensive and nonempty.
class Primitive {
 public:
  explicit Primitive(std::vector<HalfSpace> halfspaces);

  /// Orthant generator {x : x <= apex}.
  static Primitive orthant(const Vector& apex);

  const std::vector<HalfSpace>& halfspaces() const { return halfspaces_; }
  std::size_t dimension() const { return halfspaces_.front().dimension(); }
  bool contains(const Vector& x) const;
  /// min over half-spaces of their level.
  Rational level(const Vector& x) const;

  friend bool operator==(const Primitive& a, const Primitive& b) { return a.halfspaces_ == b.halfspaces_; }

 private:
  std::vector<HalfSpace> halfspaces_;
};

/// Finite union of primitives sharing one dimension.
class ComprehensiveSet {
 public:
  explicit ComprehensiveSet(std::vector<Primitive> primitives);

  const std::vector<Primitive>& primitives() const { return primitives_; }
  std::size_t dimension() const { return primitives_.front().dimension(); }
  bool contains(const Vector& x) const;
  /// max over primitives of their level; the largest t with x + t*1 in the set.
  Rational level(const Vector& x) const;

  friend bool operator==(const ComprehensiveSet& a, const ComprehensiveSet& b) {
    return a.primitives_ == b.primitives_;
  }

 private:
  std::vector<Primitive> primitives_;
};

struct FirmSystem {
  std::vector<Vector> firms;
  Vector resource;

  std::size_t size() const { return firms.size(); }
  std::size_t dimension() const { return resource.size(); }
  /// Throws Error(DimensionMismatch) when some firm has the wrong length.
  void check() const;

  friend bool operator==(const FirmSystem&, const FirmSystem&) = default;
};

struct GeneralizedGame {
  std::vector<ComprehensiveSet> utilities;
  FirmSystem firm_system;
  std::optional<std::size_t> distinguished;

  std::size_t dimension() const { return utilities.front().dimension(); }
  std::size_t firm_count() const { return utilities.size(); }
  /// Structural consistency: |U| = |V|, shared dimension, index ranges.
  void check() const;

  friend bool operator==(const GeneralizedGame&, const GeneralizedGame&) = default;
};

/// Transferable-utility game; value[S] for every nonempty coalition mask S.
struct TUGame {
  int players = 0;
  std::vector<Rational> values;

  explicit TUGame(int n = 0);
  const Rational& value(Mask s) const { return values.at(s); }
  Rational& value(Mask s) { return values.at(s); }
  const Rational& grand() const { return values.at(full_mask(players)); }

  friend bool operator==(const TUGame&, const TUGame&) = default;
};

/// V(S) lives in R^S: coordinate k of the set is member k of S in increasing order.
struct CoalitionalNTUGame {
  int players = 0;
  std::map<Mask, ComprehensiveSet> sets;
};

bool contains(const ComprehensiveSet& set, const Vector& x);

/// max over every primitive of every set of its level at x.
Rational tau(const std::vector<ComprehensiveSet>& sets, const Vector& x);

/// True iff sets[i] attains tau at x.
bool in_induced_cover(const std::vector<ComprehensiveSet>& sets, std::size_t i, const Vector& x);

struct Check {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct ValidationReport {
  std::vector<Check> checks;
  bool ok() const;
};

ValidationReport validate_game(const GeneralizedGame& g);

/// Additionally checks that every V(S) meets the nonnegative orthant in a
/// bounded set.
ValidationReport validate_ntu(const CoalitionalNTUGame& g);

/// conv(points) - R^n_+ as an intersection of half-spaces, one per facet
/// (duplicates removed, offsets normalized so <a, 1> = 1).
Primitive hull_primitive(const std::vector<Vector>& points);

}  // namespace coopx
