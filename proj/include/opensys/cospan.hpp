#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string_view>

#include "opensys/finset.hpp"

namespace opensys {

/// The three factorisation systems (E, M) on FinSet used throughout.
enum class FactSys {
  AllIso,   // E = all maps, M = isomorphisms: corelations are plain cospans
  IsoAll,   // E = isomorphisms, M = all maps: one corelation X -> X+Y <- Y
  EpiMono,  // E = surjections, M = injections
};

std::string_view to_string(FactSys s);
bool in_e(FactSys s, const FinFunction& f);
bool in_m(FactSys s, const FinFunction& f);
/// f = mono o epi with epi in E and mono in M of `s`.
EpiMono factor(FactSys s, const FinFunction& f);

/// A cospan X --left--> N <--right-- Y, stored as a concrete representative.
class Cospan {
 public:
  Cospan() = default;
  /// Throws CodomainMismatch unless both legs land in the same apex.
  Cospan(FinFunction left, FinFunction right);

  const FinFunction& left() const { return left_; }
  const FinFunction& right() const { return right_; }
  const FinSet& left_foot() const { return left_.dom(); }
  const FinSet& right_foot() const { return right_.dom(); }
  const FinSet& apex() const { return left_.cod(); }
  /// [left, right] : X + Y -> N.
  FinFunction copaired() const { return copair(left_, right_); }

  friend bool operator==(const Cospan&, const Cospan&) = default;

 private:
  FinFunction left_;
  FinFunction right_;
};

Cospan identity_cospan(const FinSet& x);
/// A function f: X -> Y seen as the cospan X --f--> Y <--id-- Y.
Cospan cospan_of(const FinFunction& f);
/// Y --id--> Y <--f-- X, the opposite of cospan_of(f).
Cospan opposite_of(const FinFunction& f);
/// Exchange the feet.
Cospan opposite(const Cospan& c);
/// The symmetry X + Y -> Y + X as a cospan.
Cospan swap_cospan(const FinSet& x, const FinSet& y);

struct CospanComposite {
  Cospan result;
  Pushout pushout;  // legs N -> P and M -> P
};

/// `a` followed by `b`, by pushout over the shared foot. Throws FootMismatch.
CospanComposite cospan_compose_detailed(const Cospan& a, const Cospan& b);
Cospan cospan_compose(const Cospan& a, const Cospan& b);
Cospan monoidal_product(const Cospan& a, const Cospan& b);
/// "2 -[0 1]-> 2 <-[1]- 1"
std::string describe(const Cospan& c);

enum class Generator { Mu, Eta, Delta, Epsilon };

std::string_view to_string(Generator g);
/// The canonical special commutative Frobenius structure on X.
Cospan frobenius_generator(Generator which, const FinSet& x);

inline constexpr std::size_t kDefaultIsoSearchBound = 10;

/// A bijection phi: a.apex -> b.apex with phi.a.left = b.left and
/// phi.a.right = b.right, further filtered by `accept` (used to match
/// decorations). Reached apex points are forced; only unreached points are
/// searched. Throws FootMismatch when the feet differ and ApexTooLarge when
/// both apexes exceed `bound` and the legs are not jointly surjective.
std::optional<FinFunction> find_apex_iso(
    const Cospan& a, const Cospan& b,
    const std::function<bool(const FinFunction&)>& accept = {},
    std::size_t bound = kDefaultIsoSearchBound);

bool iso_equal(const Cospan& a, const Cospan& b, std::size_t bound = kDefaultIsoSearchBound);

/// A cospan whose copaired legs lie in E of its factorisation system.
class Corelation {
 public:
  /// Throws InvalidValue if [left, right] is not in E of `system`.
  Corelation(Cospan cospan, FactSys system);

  const Cospan& cospan() const { return cospan_; }
  FactSys system() const { return system_; }
  const FinSet& left_foot() const { return cospan_.left_foot(); }
  const FinSet& right_foot() const { return cospan_.right_foot(); }
  const FinSet& apex() const { return cospan_.apex(); }

 private:
  Cospan cospan_;
  FactSys system_;
};

struct CorelationWithWitness {
  Corelation corelation;
  /// m : apex of the corelation -> apex of the cospan it came from, in M.
  FinFunction witness;
};

/// The E-part of a cospan.
CorelationWithWitness to_corelation(const Cospan& c, FactSys system);

struct CorelationComposite {
  Corelation corelation;
  FinFunction witness;  // apex -> pushout apex, in M
  Pushout pushout;
};

/// Pushout, then factor X + Z -> N +_Y M. Throws FootMismatch, or
/// InvalidValue when the systems differ.
CorelationComposite corelation_compose(const Corelation& a, const Corelation& b);
Corelation corelation_tensor(const Corelation& a, const Corelation& b);

}  // namespace opensys
