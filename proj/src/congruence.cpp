#include "malcev/congruence.hpp"

#include <algorithm>      // for find, equal
#include <string>         // for to_string
#include <unordered_set>  // for unordered_set

namespace malcev {

  bool EqualityClass::contains(Word const& w) const {
    return std::find(members.begin(), members.end(), w) != members.end();
  }

  EqualityClass equality_class(Word const&         w,
                               Presentation const& pres,
                               std::size_t         cap) {
    pres.check_word(w);
    EqualityClass                          result{w, {w}};
    std::unordered_set<Word, WordHash>     seen{w};
    auto const&                            rels = pres.relations();

    // result.members doubles as the queue; it grows while we iterate.
    for (std::size_t next = 0; next < result.members.size(); ++next) {
      Word const current = result.members[next];
      for (auto const& rel : rels) {
        for (auto [from, to] : {std::pair(&rel.left, &rel.right),
                                std::pair(&rel.right, &rel.left)}) {
          for (std::size_t i = 0; i + 1 < current.size(); ++i) {
            if (current[i] != (*from)[0] || current[i + 1] != (*from)[1]) {
              continue;
            }
            Word image     = current;
            image[i]       = (*to)[0];
            image[i + 1]   = (*to)[1];
            if (seen.insert(image).second) {
              if (result.members.size() >= cap) {
                throw MalcevError(ErrorKind::cap_exceeded,
                                  "equality class of " + format_word(w)
                                      + " has more than "
                                      + std::to_string(cap) + " words");
              }
              result.members.push_back(std::move(image));
            }
          }
        }
      }
    }
    return result;
  }

  std::optional<Word> left_divides(Word const&         p,
                                   Word const&         q,
                                   Presentation const& pres,
                                   std::size_t         cap) {
    pres.check_word(p);
    pres.check_word(q);
    if (p.size() > q.size()) {
      return std::nullopt;
    }
    auto const class_of_p = equality_class(p, pres, cap);
    auto const class_of_q = equality_class(q, pres, cap);
    for (auto const& u : class_of_q.members) {
      Word prefix(u.begin(), u.begin() + static_cast<std::ptrdiff_t>(p.size()));
      if (class_of_p.contains(prefix)) {
        return Word(u.begin() + static_cast<std::ptrdiff_t>(p.size()), u.end());
      }
    }
    return std::nullopt;
  }

}  // namespace malcev
