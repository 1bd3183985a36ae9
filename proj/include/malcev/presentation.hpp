// This file contains the alphabet, words and presentations of the monoids M_n,
// together with the structural data (P/Q letter classes, L/R relation words)
// that the normal form and ideal algorithms rely on.

#ifndef MALCEV_PRESENTATION_HPP_
#define MALCEV_PRESENTATION_HPP_

#include <compare>      // for strong_ordering
#include <cstddef>      // for size_t
#include <cstdint>      // for uint8_t, uint32_t
#include <functional>   // for hash
#include <map>          // for map
#include <optional>     // for optional
#include <set>          // for set
#include <stdexcept>    // for runtime_error
#include <string>       // for string
#include <string_view>  // for string_view
#include <unordered_map>  // for unordered_map
#include <unordered_set>  // for unordered_set
#include <utility>      // for pair
#include <vector>       // for vector

namespace malcev {

  enum class ErrorKind {
    invalid_argument,
    unknown_token,
    index_out_of_range,
    not_balanced,
    pq_overlap,
    lr_overlap,
    ambiguous_rewrite,
    foreign_letter,
    unstructured,
    cap_exceeded,
    window_too_small,
    alignment_violation,
    occurrence_mismatch,
    broken_chain,
  };

  //! Human-readable name of an ErrorKind, e.g. "UnknownToken".
  std::string_view error_name(ErrorKind kind) noexcept;

  class MalcevError : public std::runtime_error {
   public:
    MalcevError(ErrorKind kind, std::string const& what)
        : std::runtime_error(std::string(error_name(kind)) + ": " + what),
          _kind(kind) {}

    [[nodiscard]] ErrorKind kind() const noexcept {
      return _kind;
    }

   private:
    ErrorKind _kind;
  };

  ////////////////////////////////////////////////////////////////////////
  // Letter
  ////////////////////////////////////////////////////////////////////////

  // Order of the enumerators is the canonical generator order:
  // a, b, c, d, A_1..A_n, B_1..B_n, C_1..C_n, D_1..D_n.
  enum class LetterKind : std::uint8_t { a, b, c, d, A, B, C, D };

  struct Letter {
    LetterKind    kind  = LetterKind::a;
    std::uint32_t index = 0;  // 0 for a, b, c, d; >= 1 otherwise

    constexpr Letter() = default;
    constexpr Letter(LetterKind k, std::uint32_t i = 0) : kind(k), index(i) {}

    [[nodiscard]] constexpr bool indexed() const noexcept {
      return kind >= LetterKind::A;
    }

    // Letters compare by family first, then by index.
    friend constexpr auto operator<=>(Letter const&, Letter const&) = default;

    [[nodiscard]] std::string token() const;
  };

  namespace letters {
    inline constexpr Letter a{LetterKind::a};
    inline constexpr Letter b{LetterKind::b};
    inline constexpr Letter c{LetterKind::c};
    inline constexpr Letter d{LetterKind::d};
    constexpr Letter A(std::uint32_t i) {
      return {LetterKind::A, i};
    }
    constexpr Letter B(std::uint32_t i) {
      return {LetterKind::B, i};
    }
    constexpr Letter C(std::uint32_t i) {
      return {LetterKind::C, i};
    }
    constexpr Letter D(std::uint32_t i) {
      return {LetterKind::D, i};
    }
  }  // namespace letters

  //! Parses a single token such as "a" or "C2"; the index is not range checked.
  //! Throws UnknownToken if the token is not of that shape.
  Letter parse_letter(std::string_view token);

  ////////////////////////////////////////////////////////////////////////
  // Word
  ////////////////////////////////////////////////////////////////////////

  // The empty word is the identity of the monoid.
  using Word = std::vector<Letter>;

  struct LetterHash {
    std::size_t operator()(Letter const& x) const noexcept {
      return (static_cast<std::size_t>(x.index) << 3)
             ^ static_cast<std::size_t>(x.kind);
    }
  };

  struct WordHash {
    std::size_t operator()(Word const& w) const noexcept {
      std::size_t seed = w.size();
      for (auto const& x : w) {
        seed ^= LetterHash{}(x) + 0x9e3779b97f4a7c15ULL + (seed << 6)
                + (seed >> 2);
      }
      return seed;
    }
  };

  //! Shortlex order on words (length first, then letter by letter).
  bool shortlex_less(Word const& u, Word const& v);

  //! Tokens joined by single spaces; the empty word formats as "1".
  std::string format_word(Word const& w);

  //! Tokens joined by `sep`; the empty word formats as "1".
  std::string format_word(Word const& w, std::string_view sep);

  ////////////////////////////////////////////////////////////////////////
  // Relation, Presentation
  ////////////////////////////////////////////////////////////////////////

  struct Relation {
    Word left;
    Word right;

    friend bool operator==(Relation const&, Relation const&) = default;
  };

  class Presentation {
   public:
    //! The presentation (X_n, rho_n); throws InvalidArgument if n < 1.
    static Presentation malcev(int n);

    //! A user-supplied system of length-2 relations, checked to have the
    //! P/Q and L/R structure.  Throws NotBalanced, PQOverlap or LROverlap.
    static Presentation validated(std::vector<Relation> relations);

    //! A user-supplied system of length-2 relations without the structural
    //! checks; only the exhaustive-search procedures accept these.
    static Presentation unchecked(std::vector<Relation> relations);

    //! The index bound for A_i..D_i letters (for generic systems: the
    //! largest index that occurs).
    [[nodiscard]] int n() const noexcept {
      return _n;
    }

    [[nodiscard]] bool is_malcev() const noexcept {
      return _is_malcev;
    }

    //! true iff the P/Q and L/R disjointness conditions hold.
    [[nodiscard]] bool structured() const noexcept {
      return _structured;
    }

    [[nodiscard]] std::vector<Letter> const& generators() const noexcept {
      return _generators;
    }

    [[nodiscard]] std::vector<Relation> const& relations() const noexcept {
      return _relations;
    }

    [[nodiscard]] std::set<Letter> const& p_set() const noexcept {
      return _p_set;
    }

    [[nodiscard]] std::set<Letter> const& q_set() const noexcept {
      return _q_set;
    }

    [[nodiscard]] std::set<Word> const& l_words() const noexcept {
      return _l_words;
    }

    [[nodiscard]] std::set<Word> const& r_words() const noexcept {
      return _r_words;
    }

    // Keys are the right-hand relation words, values their left partners.
    [[nodiscard]] std::map<Word, Word> const& rewrite_map() const noexcept {
      return _rewrite_map;
    }

    [[nodiscard]] bool contains(Letter x) const;

    [[nodiscard]] bool in_p(Letter x) const {
      return _p_set.count(x) != 0;
    }

    [[nodiscard]] bool in_q(Letter x) const {
      return _q_set.count(x) != 0;
    }

    [[nodiscard]] bool is_l_word(Letter x, Letter y) const;

    //! The L-partner of the R-word xy, if xy is an R-word.
    [[nodiscard]] std::optional<std::pair<Letter, Letter>>
    rewrite(Letter x, Letter y) const;

    //! Throws ForeignLetter if some letter of w is not a generator.
    void check_word(Word const& w) const;

   private:
    Presentation() = default;
    static Presentation from_relations(std::vector<Relation> relations,
                                       std::vector<Letter>   generators);

    int                   _n          = 0;
    bool                  _is_malcev  = false;
    bool                  _structured = false;
    std::vector<Letter>   _generators;
    std::vector<Relation> _relations;
    std::set<Letter>      _p_set;
    std::set<Letter>      _q_set;
    std::set<Word>        _l_words;
    std::set<Word>        _r_words;
    std::map<Word, Word>  _rewrite_map;
    std::unordered_map<std::uint64_t, std::pair<Letter, Letter>> _rewrite_pairs;
    std::unordered_set<std::uint64_t>                           _l_pairs;
  };

  //! Convenience wrapper for Presentation::malcev.
  inline Presentation build_presentation(int n) {
    return Presentation::malcev(n);
  }

  //! Tokenizes `text` into a word over `pres`.  "1" alone is the identity.
  //! Throws UnknownToken or IndexOutOfRange.
  Word parse_word(std::string_view text, Presentation const& pres);

  //! Checks the structural conditions; throws the first failing one.
  Presentation validate_generic(std::vector<Relation> const& relations);

  //! Parses the "w1 = w2" per line format; '#' lines and blank lines are
  //! skipped.  Tokens must be well-formed letters of any index.
  std::vector<Relation> parse_relations(std::string_view text);

  //! Reads and validates a presentation file.
  Presentation load_presentation(std::string const& path);

}  // namespace malcev

#endif  // MALCEV_PRESENTATION_HPP_
