#include "malcev/rewriting.hpp"

namespace malcev {

  namespace {
    void require_structured(Presentation const& pres) {
      if (!pres.structured()) {
        throw MalcevError(ErrorKind::unstructured,
                          "left normal forms need disjoint P/Q letters, "
                          "disjoint L/R words and one L-partner per R-word");
      }
    }

    // Redexes are (P-letter)(Q-letter) pairs, so two of them never overlap and
    // a replacement (which yields an L-word) never creates a new one: one
    // left-to-right pass reaches the normal form.
    void normalize_in_place(Word& w, Presentation const& pres) {
      std::size_t i = 0;
      while (i + 1 < w.size()) {
        if (auto lhs = pres.rewrite(w[i], w[i + 1])) {
          w[i]     = lhs->first;
          w[i + 1] = lhs->second;
          i += 2;
        } else {
          ++i;
        }
      }
    }
  }  // namespace

  Element left_normal_form(Word const& w, Presentation const& pres) {
    require_structured(pres);
    pres.check_word(w);
    Element result{w};
    normalize_in_place(result.nf, pres);
    return result;
  }

  Element multiply(Element const& x, Word const& y, Presentation const& pres) {
    Word w = x.nf;
    w.insert(w.end(), y.begin(), y.end());
    return left_normal_form(w, pres);
  }

  bool equal(Word const& w1, Word const& w2, Presentation const& pres) {
    auto x = left_normal_form(w1, pres);
    auto y = left_normal_form(w2, pres);
    return x == y;
  }

  bool is_intersection_base(Element const& e, Presentation const& pres) {
    auto const m = e.nf.size();
    return m >= 2 && pres.is_l_word(e.nf[m - 2], e.nf[m - 1]);
  }

  bool is_normal_form(Word const& w, Presentation const& pres) {
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
      if (pres.rewrite(w[i], w[i + 1])) {
        return false;
      }
    }
    return true;
  }

}  // namespace malcev
