// Left normal forms for presentations with the P/Q and L/R structure, and
// the word problem decided by comparing them.

#ifndef MALCEV_REWRITING_HPP_
#define MALCEV_REWRITING_HPP_

#include <compare>  // for strong_ordering

#include "presentation.hpp"  // for Presentation, Word

namespace malcev {

  // An element of the monoid, represented by its left normal form.  Elements
  // are only meaningful relative to the presentation that produced them.
  struct Element {
    Word nf;

    [[nodiscard]] std::size_t length() const noexcept {
      return nf.size();
    }

    [[nodiscard]] bool is_identity() const noexcept {
      return nf.empty();
    }

    friend bool operator==(Element const&, Element const&) = default;
  };

  //! Shortlex order on normal forms.
  inline bool operator<(Element const& x, Element const& y) {
    return shortlex_less(x.nf, y.nf);
  }

  //! Replaces every R-word factor of w by its L-partner.  Throws
  //! ForeignLetter, or Unstructured if pres lacks the P/Q, L/R structure.
  Element left_normal_form(Word const& w, Presentation const& pres);

  //! The normal form of the product x * y.
  Element multiply(Element const& x, Word const& y, Presentation const& pres);

  //! true iff w1 and w2 represent the same element.
  bool equal(Word const& w1, Word const& w2, Presentation const& pres);

  //! true iff the last two letters of e.nf form an L-word.
  bool is_intersection_base(Element const& e, Presentation const& pres);

  //! true iff w contains no R-word factor.
  bool is_normal_form(Word const& w, Presentation const& pres);

}  // namespace malcev

#endif  // MALCEV_REWRITING_HPP_
