#include "malcev/presentation.hpp"

#include <algorithm>  // for sort, binary_search, max
#include <cctype>     // for isspace, isdigit
#include <fstream>    // for ifstream
#include <sstream>    // for ostringstream, istringstream

namespace malcev {

  namespace {
    std::uint64_t letter_code(Letter x) noexcept {
      return (static_cast<std::uint64_t>(x.index) << 3)
             | static_cast<std::uint64_t>(x.kind);
    }

    std::uint64_t pair_code(Letter x, Letter y) noexcept {
      return (letter_code(x) << 32) | letter_code(y);
    }

    std::vector<std::string_view> split_ws(std::string_view text) {
      std::vector<std::string_view> out;
      std::size_t                   i = 0;
      while (i < text.size()) {
        while (i < text.size()
               && std::isspace(static_cast<unsigned char>(text[i]))) {
          ++i;
        }
        std::size_t j = i;
        while (j < text.size()
               && !std::isspace(static_cast<unsigned char>(text[j]))) {
          ++j;
        }
        if (j > i) {
          out.push_back(text.substr(i, j - i));
        }
        i = j;
      }
      return out;
    }

    std::string_view trim(std::string_view s) {
      while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
        s.remove_prefix(1);
      }
      while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
        s.remove_suffix(1);
      }
      return s;
    }

    std::string relation_string(Relation const& r) {
      return "(" + format_word(r.left, "") + ", " + format_word(r.right, "")
             + ")";
    }
  }  // namespace

  std::string_view error_name(ErrorKind kind) noexcept {
    switch (kind) {
      case ErrorKind::invalid_argument:
        return "InvalidArgument";
      case ErrorKind::unknown_token:
        return "UnknownToken";
      case ErrorKind::index_out_of_range:
        return "IndexOutOfRange";
      case ErrorKind::not_balanced:
        return "NotBalanced";
      case ErrorKind::pq_overlap:
        return "PQOverlap";
      case ErrorKind::lr_overlap:
        return "LROverlap";
      case ErrorKind::ambiguous_rewrite:
        return "AmbiguousRewrite";
      case ErrorKind::foreign_letter:
        return "ForeignLetter";
      case ErrorKind::unstructured:
        return "Unstructured";
      case ErrorKind::cap_exceeded:
        return "CapExceeded";
      case ErrorKind::window_too_small:
        return "WindowTooSmall";
      case ErrorKind::alignment_violation:
        return "AlignmentViolation";
      case ErrorKind::occurrence_mismatch:
        return "OccurrenceMismatch";
      case ErrorKind::broken_chain:
        return "BrokenChain";
    }
    return "Unknown";
  }

  ////////////////////////////////////////////////////////////////////////
  // Letter and Word
  ////////////////////////////////////////////////////////////////////////

  std::string Letter::token() const {
    static constexpr char names[] = {'a', 'b', 'c', 'd', 'A', 'B', 'C', 'D'};
    std::string           out(1, names[static_cast<int>(kind)]);
    if (indexed()) {
      out += std::to_string(index);
    }
    return out;
  }

  Letter parse_letter(std::string_view token) {
    auto fail = [&token]() {
      return MalcevError(ErrorKind::unknown_token,
                         "\"" + std::string(token) + "\" is not a letter");
    };
    if (token.empty()) {
      throw fail();
    }
    char const head = token.front();
    if (head >= 'a' && head <= 'd') {
      if (token.size() != 1) {
        throw fail();
      }
      return Letter(static_cast<LetterKind>(head - 'a'));
    }
    if (head < 'A' || head > 'D' || token.size() < 2 || token[1] == '0'
        || token.size() > 10) {
      throw fail();
    }
    std::uint64_t index = 0;
    for (char ch : token.substr(1)) {
      if (!std::isdigit(static_cast<unsigned char>(ch))) {
        throw fail();
      }
      index = 10 * index + static_cast<std::uint64_t>(ch - '0');
    }
    if (index > (1u << 28)) {
      throw fail();
    }
    return Letter(static_cast<LetterKind>(4 + (head - 'A')),
                  static_cast<std::uint32_t>(index));
  }

  bool shortlex_less(Word const& u, Word const& v) {
    if (u.size() != v.size()) {
      return u.size() < v.size();
    }
    return u < v;
  }

  std::string format_word(Word const& w) {
    return format_word(w, " ");
  }

  std::string format_word(Word const& w, std::string_view sep) {
    if (w.empty()) {
      return "1";
    }
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (i != 0) {
        out += sep;
      }
      out += w[i].token();
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Presentation
  ////////////////////////////////////////////////////////////////////////

  Presentation Presentation::malcev(int n) {
    using namespace letters;
    if (n < 1) {
      throw MalcevError(ErrorKind::invalid_argument,
                        "expected n >= 1, found " + std::to_string(n));
    }
    auto const            m = static_cast<std::uint32_t>(n);
    std::vector<Relation> rels;
    rels.reserve(2 * m + 1);
    rels.push_back({{d, a}, {A(1), C(1)}});
    for (std::uint32_t i = 1; i < m; ++i) {
      rels.push_back({{A(i), D(i)}, {A(i + 1), C(i + 1)}});
    }
    rels.push_back({{A(m), D(m)}, {d, b}});
    rels.push_back({{c, b}, {B(m), D(m)}});
    for (std::uint32_t i = m - 1; i >= 1; --i) {
      rels.push_back({{B(i + 1), C(i + 1)}, {B(i), D(i)}});
    }

    std::vector<Letter> gens = {a, b, c, d};
    for (auto kind : {LetterKind::A, LetterKind::B, LetterKind::C, LetterKind::D}) {
      for (std::uint32_t i = 1; i <= m; ++i) {
        gens.emplace_back(kind, i);
      }
    }
    Presentation result = from_relations(std::move(rels), std::move(gens));
    result._n           = n;
    result._is_malcev   = true;
    return result;
  }

  Presentation Presentation::from_relations(std::vector<Relation> relations,
                                            std::vector<Letter>   generators) {
    Presentation result;
    std::sort(generators.begin(), generators.end());
    generators.erase(std::unique(generators.begin(), generators.end()),
                     generators.end());
    result._generators = std::move(generators);
    for (auto const& x : result._generators) {
      result._n = std::max(result._n, static_cast<int>(x.index));
    }
    for (auto const& rel : relations) {
      for (Word const* w : {&rel.left, &rel.right}) {
        result._p_set.insert((*w)[0]);
        result._q_set.insert((*w)[1]);
      }
      result._l_words.insert(rel.left);
      result._r_words.insert(rel.right);
      result._rewrite_map.emplace(rel.right, rel.left);
      result._rewrite_pairs.emplace(pair_code(rel.right[0], rel.right[1]),
                                    std::pair(rel.left[0], rel.left[1]));
      result._l_pairs.insert(pair_code(rel.left[0], rel.left[1]));
    }
    result._relations = std::move(relations);

    bool disjoint_pq = std::none_of(
        result._p_set.begin(), result._p_set.end(), [&result](Letter x) {
          return result._q_set.count(x) != 0;
        });
    bool disjoint_lr = std::none_of(
        result._l_words.begin(), result._l_words.end(), [&result](Word const& w) {
          return result._r_words.count(w) != 0;
        });
    result._structured = disjoint_pq && disjoint_lr
                         && result._rewrite_map.size() == result._r_words.size();
    // An R-word with two different L-partners makes the normal form ambiguous.
    for (auto const& rel : result._relations) {
      if (result._rewrite_map.at(rel.right) != rel.left) {
        result._structured = false;
      }
    }
    return result;
  }

  namespace {
    std::vector<Letter> letters_of(std::vector<Relation> const& relations) {
      std::vector<Letter> gens;
      for (auto const& rel : relations) {
        gens.insert(gens.end(), rel.left.begin(), rel.left.end());
        gens.insert(gens.end(), rel.right.begin(), rel.right.end());
      }
      return gens;
    }

    void check_balanced(std::vector<Relation> const& relations) {
      for (auto const& rel : relations) {
        if (rel.left.size() != 2 || rel.right.size() != 2) {
          throw MalcevError(ErrorKind::not_balanced,
                            "relation " + relation_string(rel)
                                + " does not have two words of length 2");
        }
      }
    }
  }  // namespace

  Presentation Presentation::unchecked(std::vector<Relation> relations) {
    check_balanced(relations);
    auto gens = letters_of(relations);
    return from_relations(std::move(relations), std::move(gens));
  }

  Presentation Presentation::validated(std::vector<Relation> relations) {
    Presentation result = unchecked(std::move(relations));
    for (auto const& x : result._p_set) {
      if (result._q_set.count(x) != 0) {
        throw MalcevError(ErrorKind::pq_overlap,
                          "letter " + x.token()
                              + " occurs both first and second in relation "
                                "words");
      }
    }
    for (auto const& w : result._l_words) {
      if (result._r_words.count(w) != 0) {
        throw MalcevError(ErrorKind::lr_overlap,
                          "word " + format_word(w, "")
                              + " occurs on both sides of relations");
      }
    }
    for (auto const& rel : result._relations) {
      if (result._rewrite_map.at(rel.right) != rel.left) {
        throw MalcevError(ErrorKind::ambiguous_rewrite,
                          "right-hand word " + format_word(rel.right, "")
                              + " has more than one left-hand partner");
      }
    }
    return result;
  }

  bool Presentation::contains(Letter x) const {
    return std::binary_search(_generators.begin(), _generators.end(), x);
  }

  bool Presentation::is_l_word(Letter x, Letter y) const {
    return _l_pairs.count(pair_code(x, y)) != 0;
  }

  std::optional<std::pair<Letter, Letter>> Presentation::rewrite(Letter x,
                                                                 Letter y) const {
    auto it = _rewrite_pairs.find(pair_code(x, y));
    if (it == _rewrite_pairs.end()) {
      return std::nullopt;
    }
    return it->second;
  }

  void Presentation::check_word(Word const& w) const {
    for (auto const& x : w) {
      if (!contains(x)) {
        throw MalcevError(ErrorKind::foreign_letter,
                          "letter " + x.token()
                              + " is not a generator of the presentation");
      }
    }
  }

  ////////////////////////////////////////////////////////////////////////
  // Parsing
  ////////////////////////////////////////////////////////////////////////

  Word parse_word(std::string_view text, Presentation const& pres) {
    auto tokens = split_ws(text);
    if (tokens.empty()) {
      throw MalcevError(ErrorKind::unknown_token,
                        "empty input; use \"1\" for the identity");
    }
    if (tokens.size() == 1 && tokens[0] == "1") {
      return {};
    }
    Word w;
    w.reserve(tokens.size());
    for (auto tok : tokens) {
      Letter x = parse_letter(tok);
      if (x.indexed() && x.index > static_cast<std::uint32_t>(pres.n())) {
        throw MalcevError(ErrorKind::index_out_of_range,
                          "\"" + std::string(tok) + "\" has index larger than n = "
                              + std::to_string(pres.n()));
      }
      if (!pres.contains(x)) {
        throw MalcevError(ErrorKind::unknown_token,
                          "\"" + std::string(tok)
                              + "\" is not a generator of the presentation");
      }
      w.push_back(x);
    }
    return w;
  }

  Presentation validate_generic(std::vector<Relation> const& relations) {
    return Presentation::validated(relations);
  }

  std::vector<Relation> parse_relations(std::string_view text) {
    std::vector<Relation> out;
    std::size_t           line_no = 0;
    std::istringstream    in{std::string(text)};
    std::string           line;
    while (std::getline(in, line)) {
      ++line_no;
      auto body = trim(line);
      if (body.empty() || body.front() == '#') {
        continue;
      }
      auto eq = body.find('=');
      if (eq == std::string_view::npos
          || body.find('=', eq + 1) != std::string_view::npos) {
        throw MalcevError(ErrorKind::invalid_argument,
                          "line " + std::to_string(line_no)
                              + ": expected exactly one '='");
      }
      Relation rel;
      for (auto tok : split_ws(body.substr(0, eq))) {
        rel.left.push_back(parse_letter(tok));
      }
      for (auto tok : split_ws(body.substr(eq + 1))) {
        rel.right.push_back(parse_letter(tok));
      }
      out.push_back(std::move(rel));
    }
    return out;
  }

  Presentation load_presentation(std::string const& path) {
    std::ifstream file(path);
    if (!file) {
      throw MalcevError(ErrorKind::invalid_argument,
                        "cannot open presentation file " + path);
    }
    std::ostringstream buffer;
    buffer << file.rdbuf();
    return validate_generic(parse_relations(buffer.str()));
  }

}  // namespace malcev
