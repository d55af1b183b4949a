#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

namespace hring {

/// Index of a ring in the cycle H_0..H_{p-1}. Always read together with the
/// period of its configuration.
using Ring = int;

/// Bit set over ring indices; bit r is set iff ring r is a member.
using RingSet = std::uint64_t;

/// Rings are tracked in 64-bit sets, which bounds the period.
inline constexpr int kMaxPeriod = 64;

constexpr RingSet ring_bit(Ring r) { return RingSet{1} << r; }
constexpr bool contains(RingSet s, Ring r) { return ((s >> r) & 1U) != 0; }

/// Members of `s` in ascending order.
std::vector<Ring> members_of(RingSet s);

struct Pole {
  std::string id;
  Ring host = 0;  // innermost ring surrounding the pole

  bool operator==(const Pole&) const = default;
};

enum class MarkerKind { ring, free_bounded, unbounded };

struct FatouMarker {
  MarkerKind kind = MarkerKind::unbounded;
  Ring host = 0;  // only meaningful for MarkerKind::ring

  bool operator==(const FatouMarker& o) const {
    return kind == o.kind && (kind != MarkerKind::ring || host == o.host);
  }
};

/// Optional periodic Fatou cycle U_1..U_q whose first member has an omitted
/// value in its closure. With `is_ring_cycle` set the U-cycle is the ring
/// cycle itself and no markers are stored.
struct FatouCycle {
  int q = 1;
  bool is_ring_cycle = false;
  std::vector<FatouMarker> markers;

  bool operator==(const FatouCycle&) const = default;
};

/// Structural defect in a configuration or its document. `path` is a JSON
/// pointer into the configuration document ("/poles/1/host").
class ConfigError : public std::runtime_error {
 public:
  ConfigError(std::string path, const std::string& what);
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

/// A cycle of rings with its nesting forest and pole/omitted-value markers.
///
/// Construction enforces the structural invariants only (indices in range,
/// acyclic forest, distinct pole ids); dynamical axioms are checked by
/// `validate`. Poles are stored sorted by (host, id). Immutable.
class Configuration {
 public:
  Configuration(int p, std::vector<std::optional<Ring>> parent, std::vector<Pole> poles,
                Ring omitted_host, std::optional<FatouCycle> fatou = std::nullopt);

  int period() const { return p_; }
  const std::vector<std::optional<Ring>>& parents() const { return parent_; }
  std::optional<Ring> parent(Ring r) const { return parent_[r]; }
  std::span<const Pole> poles() const { return poles_; }
  Ring omitted_host() const { return omitted_host_; }
  const std::optional<FatouCycle>& fatou() const { return fatou_; }

  Ring succ(Ring r) const { return (r + 1) % p_; }
  Ring pred(Ring r) const { return (r + p_ - 1) % p_; }

  bool is_root(Ring r) const { return !parent_[r].has_value(); }
  std::vector<Ring> roots() const;
  std::vector<Ring> children(Ring r) const;

  /// Proper ancestors of `r`, i.e. the rings surrounding ring r.
  RingSet ancestors(Ring r) const { return ancestors_[r]; }
  RingSet ancestors_or_self(Ring r) const { return ancestors_[r] | ring_bit(r); }
  RingSet descendants(Ring r) const;
  Ring root_of(Ring r) const;

  /// True iff ring a surrounds ring b (a is a proper ancestor of b).
  bool surrounds(Ring a, Ring b) const { return contains(ancestors_[b], a); }

  /// Rings surrounding O_f.
  RingSet omitted_surrounders() const { return ancestors_or_self(omitted_host_); }
  /// Rings surrounding the given pole.
  RingSet surrounders_of(const Pole& w) const { return ancestors_or_self(w.host); }
  /// Rings surrounding at least one pole.
  RingSet pole_surrounders() const { return pole_surrounders_; }

  /// Full configuration with the Fatou cycle replaced.
  Configuration with_fatou(std::optional<FatouCycle> fatou) const;

  bool operator==(const Configuration& o) const {
    return p_ == o.p_ && parent_ == o.parent_ && poles_ == o.poles_ &&
           omitted_host_ == o.omitted_host_ && fatou_ == o.fatou_;
  }

 private:
  int p_;
  std::vector<std::optional<Ring>> parent_;
  std::vector<Pole> poles_;
  Ring omitted_host_;
  std::optional<FatouCycle> fatou_;
  std::vector<RingSet> ancestors_;
  RingSet pole_surrounders_ = 0;
};

// ---------------------------------------------------------------------------
// Axiom validation

enum class Axiom { A1, A2, A3, A4, A5, A6, A7, F1, F2, F3, STRUCT };

std::string to_string(Axiom a);

struct Violation {
  Axiom axiom;
  std::vector<Ring> rings;
  std::vector<std::string> poles;
  std::string message;
};

struct ViolationReport {
  std::vector<Violation> entries;

  bool ok() const { return entries.empty(); }
  /// Axiom ids of all entries, sorted (multiset).
  std::vector<Axiom> axioms() const;
  std::size_t count(Axiom a) const;
};

struct ValidateOptions {
  /// Additionally require the innermost O_f ring to surround no other ring.
  bool strict_innermost = false;
};

/// Checks the axiom set A1-A7 and, when a Fatou cycle is attached, F1-F3.
/// Every violation is reported with a witness.
ViolationReport validate(const Configuration& c, ValidateOptions opts = {});

// ---------------------------------------------------------------------------
// Rotation symmetry

/// Lexicographic key used to pick canonical rotations and to order corpora.
struct Encoding {
  std::vector<int> parent;      // absent parent encoded as p
  std::vector<int> pole_hosts;  // sorted
  int omitted_host = 0;
  std::vector<int> fatou;       // empty when no Fatou cycle is attached

  auto operator<=>(const Encoding&) const = default;
};

Encoding encode(const Configuration& c);

/// Relabels ring i as (i - k) mod p. Fatou marker positions are not rotated,
/// only the ring hosts they reference.
Configuration rotate(const Configuration& c, int k);

/// The rotation image with minimal encoding; ties broken by pole ids, then
/// by the smallest shift.
Configuration canonical_form(const Configuration& c);

// ---------------------------------------------------------------------------
// JSON documents

/// Parses a configuration document. Throws ConfigError (with a JSON pointer)
/// on malformed or structurally invalid documents.
Configuration configuration_from_json(const nlohmann::json& doc);
Configuration parse_configuration(std::string_view text);

nlohmann::ordered_json to_json(const Configuration& c);
nlohmann::ordered_json to_json(const ViolationReport& r);

}  // namespace hring
