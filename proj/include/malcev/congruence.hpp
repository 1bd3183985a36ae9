// Exhaustive-search decision procedures for length-preserving presentations:
// closure of a word under relation applications, and left divisibility.  These
// work for any system of length-2 relations, structured or not, and serve as
// the independent check on the normal form.

#ifndef MALCEV_CONGRUENCE_HPP_
#define MALCEV_CONGRUENCE_HPP_

#include <cstddef>   // for size_t
#include <optional>  // for optional
#include <vector>    // for vector

#include "presentation.hpp"  // for Presentation, Word

namespace malcev {

  inline constexpr std::size_t default_class_cap = 1'000'000;

  struct EqualityClass {
    Word representative;
    // In breadth-first order of discovery; members.front() == representative.
    std::vector<Word> members;

    [[nodiscard]] bool contains(Word const& w) const;
  };

  //! All words reachable from w by applying relations in either direction.
  //! Throws CapExceeded once more than `cap` words have been found.
  EqualityClass equality_class(Word const&         w,
                               Presentation const& pres,
                               std::size_t         cap = default_class_cap);

  //! A word w with p * w = q, or nullopt if q is not in the right ideal pM.
  //! The witness comes from the first member of the class of q (in
  //! breadth-first order) whose length-|p| prefix is equal to p.
  std::optional<Word> left_divides(Word const&         p,
                                   Word const&         q,
                                   Presentation const& pres,
                                   std::size_t         cap = default_class_cap);

}  // namespace malcev

#endif  // MALCEV_CONGRUENCE_HPP_
