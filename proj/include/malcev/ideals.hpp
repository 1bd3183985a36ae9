// Intersections of principal right ideals pM and qM.
//
// The fast path decides the intersection from three facts about M_n: if
// neither of p, q left-divides the other then any non-empty intersection is
// generated by elements v = px = qy with x, y single letters in Q_n; for
// n >= 2 there is at most one such v, and for n = 1 at most two.  A windowed
// enumeration provides an independent oracle, and verify_alignment sweeps
// both over bounded sets of elements.

#ifndef MALCEV_IDEALS_HPP_
#define MALCEV_IDEALS_HPP_

#include <cstddef>      // for size_t
#include <cstdint>      // for uint64_t
#include <string>       // for string
#include <string_view>  // for string_view
#include <utility>      // for pair
#include <vector>       // for vector

#include "presentation.hpp"  // for Presentation
#include "rewriting.hpp"     // for Element

namespace malcev {

  enum class IntersectionKind { empty, principal, generators };

  enum class Provenance {
    reachable_p_to_q,  // q is in pM, so pM ∩ qM = qM
    reachable_q_to_p,  // p is in qM, so pM ∩ qM = pM
    base_search,       // single-letter Q-extensions of p and q
  };

  std::string_view to_string(IntersectionKind kind) noexcept;
  std::string_view to_string(Provenance provenance) noexcept;

  struct IntersectionResult {
    IntersectionKind kind = IntersectionKind::empty;
    // Sorted shortlex; pairwise incomparable under left divisibility.
    std::vector<Element> generators;
    Provenance           provenance = Provenance::base_search;
  };

  //! The maximum number of generators an intersection may need: 1 for
  //! n >= 2 and 2 for n = 1.
  std::size_t alignment_bound(Presentation const& pres) noexcept;

  //! Exact pM ∩ qM.  Throws AlignmentViolation if the base search finds more
  //! candidates than alignment_bound(pres) allows.
  IntersectionResult intersect_principal(Element const&      p,
                                         Element const&      q,
                                         Presentation const& pres);

  struct WindowedIntersection {
    std::size_t window = 0;
    // Every element of length <= window in both ideals, shortlex sorted.
    std::vector<Element> common;
    // The members of `common` with no proper left divisor in `common`.
    std::vector<Element> minimal;
  };

  //! Enumerates pM ∩ qM up to length `window`.  Throws WindowTooSmall if
  //! window < max(|p|, |q|) + 1.
  WindowedIntersection brute_force_intersection(Element const&      p,
                                                Element const&      q,
                                                std::size_t         window,
                                                Presentation const& pres);

  //! All elements whose normal form has length <= max_length, shortlex order.
  std::vector<Element> enumerate_elements(Presentation const& pres,
                                          std::size_t         max_length);

  inline constexpr std::uint64_t default_sample_seed = 20240611;

  struct AlignmentConfig {
    std::size_t   max_length = 2;  // L
    std::size_t   samples    = 50;  // S
    std::size_t   window     = 3;   // W, at least L + 1
    std::uint64_t seed       = default_sample_seed;
  };

  struct NonPrincipalPair {
    Element              p;
    Element              q;
    std::vector<Element> generators;
  };

  struct AlignmentReport {
    int                           n = 0;
    AlignmentConfig               config;
    std::size_t                   element_count     = 0;
    std::size_t                   pair_count        = 0;
    std::size_t                   max_generators    = 0;
    std::size_t                   empty_count       = 0;
    std::size_t                   base_search_count = 0;
    std::vector<NonPrincipalPair> non_principal;
    std::size_t                   oracle_pairs = 0;
    // One human-readable record per failed check.
    std::vector<std::string> violations;

    //! Generator bound respected and no violations.
    [[nodiscard]] bool ok() const noexcept;
  };

  //! Runs intersect_principal on every ordered pair of elements of length
  //! <= L, and cross-checks config.samples seeded pairs against the oracle.
  //! Failures are recorded in the report, never thrown.  Throws
  //! WindowTooSmall if W < L + 1.
  AlignmentReport verify_alignment(Presentation const&    pres,
                                   AlignmentConfig const& config);

}  // namespace malcev

#endif  // MALCEV_IDEALS_HPP_
