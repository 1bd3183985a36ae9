// Free-group words and step-checked derivations.
//
// If M_n embedded in a group, every relation of rho_n would hold there, and
// a short calculation with inverses shows ca = B_1 C_1 in that group.  Since
// ca and B_1 C_1 are distinct normal forms, no such embedding exists.  This
// file turns the calculation into a script of elementary moves that can be
// replayed and checked one step at a time.

#ifndef MALCEV_GROUP_DERIVATION_HPP_
#define MALCEV_GROUP_DERIVATION_HPP_

#include <cstddef>  // for size_t
#include <map>      // for map
#include <string>   // for string
#include <variant>  // for variant
#include <vector>   // for vector

#include "presentation.hpp"  // for Letter, Presentation
#include "rewriting.hpp"     // for Element

namespace malcev {

  struct SignedLetter {
    Letter letter;
    int    sign = 1;  // +1 or -1

    [[nodiscard]] SignedLetter inverse() const noexcept {
      return {letter, -sign};
    }

    friend bool operator==(SignedLetter const&, SignedLetter const&) = default;
  };

  using GroupWord = std::vector<SignedLetter>;

  //! The positive word with the letters of w.
  GroupWord to_group_word(Word const& w);

  //! The formal inverse: reversed, every sign flipped.
  GroupWord formal_inverse(GroupWord const& g);

  //! Tokens such as "c b b^-1 d^-1 d a"; the empty word is "1".
  std::string format_group_word(GroupWord const& g);

  //! Cancels adjacent x x^-1 and x^-1 x pairs until none remain.
  GroupWord free_reduce(GroupWord const& g);

  //! Sum of the signs of each letter (the image in the free abelian group).
  std::map<Letter, int> exponent_sums(GroupWord const& g);

  enum class Direction { left_to_right, right_to_left };

  // Inserts x x^-1 (first_sign = +1) or x^-1 x (first_sign = -1) so that the
  // pair starts at `position`.
  struct FreeInsert {
    std::size_t position;
    Letter      letter;
    int         first_sign = 1;
  };

  // Removes the mutually inverse pair starting at `position`.
  struct FreeCancel {
    std::size_t position;
  };

  // Replaces one side of relation `relation` (the left side when direction is
  // left_to_right) by the other, both taken as positive words; when `inverted`
  // the formal inverses of both sides are used instead.
  struct RelatorSubst {
    std::size_t position;
    std::size_t relation;
    Direction   direction = Direction::left_to_right;
    bool        inverted  = false;
  };

  using Move = std::variant<FreeInsert, FreeCancel, RelatorSubst>;

  struct DerivationStep {
    Move      move;
    GroupWord before;
    GroupWord after;
  };

  std::string describe(Move const& move, Presentation const& pres);

  //! Applies one move.  Throws OccurrenceMismatch if the subword the move
  //! expects is not found at its position.
  GroupWord apply_move(GroupWord const&    g,
                       Move const&         move,
                       Presentation const& pres);

  //! apply_move(g, step.move, pres); `step.before` and `step.after` are not
  //! consulted.
  GroupWord apply_step(GroupWord const&      g,
                       DerivationStep const& step,
                       Presentation const&   pres);

  //! The derivation of B_1 C_1 from c a using the relations of the Malcev
  //! presentation `pres` and free-group moves.
  std::vector<DerivationStep> build_obstruction_script(Presentation const& pres);

  struct ObstructionCertificate {
    int                         n = 0;
    std::vector<DerivationStep> steps;
    // Normal forms of c a and B_1 C_1 in the monoid; they differ.
    Element source_nf;
    Element target_nf;
  };

  //! Replays `steps` from c a, checking every step and the end point, and
  //! confirms c a != B_1 C_1 in the monoid.  Throws OccurrenceMismatch or
  //! BrokenChain naming the failing step index.
  ObstructionCertificate check_obstruction(Presentation const&                pres,
                                           std::vector<DerivationStep> const& steps);

  //! check_obstruction(pres, build_obstruction_script(pres)).
  ObstructionCertificate verify_obstruction(Presentation const& pres);

}  // namespace malcev

#endif  // MALCEV_GROUP_DERIVATION_HPP_
