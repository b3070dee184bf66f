#ifndef GVD_HILBERT_HPP
#define GVD_HILBERT_HPP

#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "gvd/groebner.hpp"
#include "gvd/unipoly.hpp"

namespace gvd {

// Krull dimension sentinel for the unit ideal (never fed to the invariant
// formulas).
inline constexpr int kUnitDim = std::numeric_limits<int>::min();

// Hilbert series of R/I in both forms: numerator over (1-t)^ambient and the
// reduced h-polynomial over (1-t)^dim.
struct HilbertData {
  IntPoly numerator;
  IntPoly h;
  int dim = 0;
  int ambient = 0;
  bool unit = false;
};

using MonomialList = std::vector<Monomial>;

MonomialList minimalize_monomials(MonomialList gens);

// Numerator of the Hilbert series of R/<gens> over (1-t)^n, by pivot
// recursion HN(I) = HN(I + <x>) + t * HN(I : x) on the variable occurring
// in the most minimal generators (ties by ring order).  Memoized globally
// on the canonical minimal generator set.
IntPoly hilbert_numerator(const MonomialList& minimal_gens);

// Divides the exact power of (1-t) out of the numerator.
HilbertData reduce_series(IntPoly numerator, int ambient);

// Monomial ideal generated by the leading monomials of the reduced basis.
Ideal initial_ideal(const Ideal& I, const MonomialOrder& order);

HilbertData hilbert_data(const Ideal& I);
HilbertData hilbert_data(const Ideal& I, const MonomialOrder& order);

// Coefficient of t^k in the Hilbert series.
Int hilbert_function(const HilbertData& hd, long k);

// Independent brute-force oracle: counts standard monomials of the given
// total degree under the reduced grevlex basis.
Int hilbert_function_oracle(const Ideal& I, int degree);

// HP(t) = sum_i h_i * C(t - i + d - 1, d - 1); the zero polynomial when
// d = 0.
RatPoly hilbert_polynomial(const HilbertData& hd);

enum class CmStatus { Certified, Asserted, Unknown };
enum class HilbertianClass { Hilbertian, AlmostHilbertian, Neither, Unknown };
enum class Provenance { Direct, Recursion };

std::string to_string(CmStatus s);
std::string to_string(HilbertianClass h);
std::string to_string(Provenance p);

struct InvariantReport {
  IntPoly h;
  int dim = 0;
  int ambient = 0;
  std::optional<int> reg;  // absent when CM status is unknown
  Int e = 0;
  int a = 0;
  HilbertianClass hilbertian = HilbertianClass::Unknown;
  CmStatus cm = CmStatus::Unknown;
  Provenance provenance = Provenance::Direct;
  std::string order_used = "grevlex";
  std::vector<std::string> notes;
};

// e and a from the Hilbert series (exact); reg only when the CM status is
// certified or asserted.  Errors on the unit ideal.
InvariantReport invariants_direct(const Ideal& I, CmStatus cm);

HilbertianClass classify_hilbertian(const HilbertData& hd, CmStatus cm);

}  // namespace gvd

#endif
