// Exhaustive property suites over bounded sets of words or elements.  Each
// suite counts what it checked and collects one record per violation.

#ifndef MALCEV_SUITES_HPP_
#define MALCEV_SUITES_HPP_

#include <cstddef>  // for size_t
#include <string>   // for string
#include <vector>   // for vector

#include "presentation.hpp"  // for Presentation, Word

namespace malcev {

  struct SuiteReport {
    std::string              suite;
    std::size_t              checked = 0;
    std::vector<std::string> violations;

    [[nodiscard]] bool ok() const noexcept {
      return violations.empty();
    }
  };

  //! Every word over the generators of length exactly `length`, in shortlex
  //! order.
  std::vector<Word> all_words(Presentation const& pres, std::size_t length);

  //! Every word of length <= max_length, shortlex order.
  std::vector<Word> all_words_up_to(Presentation const& pres,
                                    std::size_t         max_length);

  //! Partition of all words of length <= max_length by normal form versus
  //! partition by equality class.
  SuiteReport nf_oracle_suite(Presentation const& pres, std::size_t max_length);

  //! ac = bc => a = b and ca = cb => a = b for |a|, |b| <= ab_length and
  //! |c| <= c_length.
  SuiteReport cancellative_suite(Presentation const& pres,
                                 std::size_t         ab_length,
                                 std::size_t         c_length);

  //! Co-determinism at every element of length <= max_length, and every
  //! out-edge of those elements increases the length by one.
  SuiteReport codeterminism_suite(Presentation const& pres,
                                  std::size_t         max_length);

  //! For every element of length <= max_length: in-degree >= 2 iff it is an
  //! intersection base, and bases are only entered by Q-letters.
  SuiteReport indegree_suite(Presentation const& pres, std::size_t max_length);

}  // namespace malcev

#endif  // MALCEV_SUITES_HPP_
