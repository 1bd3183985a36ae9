#include "malcev/suites.hpp"

#include <map>            // for map
#include <set>            // for set
#include <unordered_map>  // for unordered_map

#include "malcev/cayley.hpp"      // for predecessors, check_codeterminism
#include "malcev/congruence.hpp"  // for equality_class
#include "malcev/ideals.hpp"      // for enumerate_elements
#include "malcev/rewriting.hpp"   // for left_normal_form

namespace malcev {

  std::vector<Word> all_words(Presentation const& pres, std::size_t length) {
    std::vector<Word> layer = {Word{}};
    for (std::size_t i = 0; i < length; ++i) {
      std::vector<Word> next;
      next.reserve(layer.size() * pres.generators().size());
      for (auto const& w : layer) {
        for (auto const& x : pres.generators()) {
          Word ext = w;
          ext.push_back(x);
          next.push_back(std::move(ext));
        }
      }
      layer = std::move(next);
    }
    return layer;
  }

  std::vector<Word> all_words_up_to(Presentation const& pres,
                                    std::size_t         max_length) {
    std::vector<Word> result;
    for (std::size_t len = 0; len <= max_length; ++len) {
      auto layer = all_words(pres, len);
      result.insert(result.end(),
                    std::make_move_iterator(layer.begin()),
                    std::make_move_iterator(layer.end()));
    }
    return result;
  }

  SuiteReport nf_oracle_suite(Presentation const& pres, std::size_t max_length) {
    SuiteReport report{"nf-oracle", 0, {}};
    for (std::size_t len = 0; len <= max_length; ++len) {
      auto const words = all_words(pres, len);
      std::map<Word, std::set<Word>> by_nf;
      for (auto const& w : words) {
        by_nf[left_normal_form(w, pres).nf].insert(w);
      }
      std::set<Word> covered;
      for (auto const& w : words) {
        ++report.checked;
        if (covered.count(w) != 0) {
          continue;
        }
        auto const     cls = equality_class(w, pres);
        std::set<Word> members(cls.members.begin(), cls.members.end());
        covered.insert(members.begin(), members.end());
        auto const& block = by_nf.at(left_normal_form(w, pres).nf);
        if (members != block) {
          report.violations.push_back(
              "class of " + format_word(w) + " has "
              + std::to_string(members.size()) + " words, normal-form block has "
              + std::to_string(block.size()));
        }
      }
    }
    return report;
  }

  SuiteReport cancellative_suite(Presentation const& pres,
                                 std::size_t         ab_length,
                                 std::size_t         c_length) {
    SuiteReport report{"cancellative", 0, {}};
    auto const  ab = all_words_up_to(pres, ab_length);
    auto const  cs = all_words_up_to(pres, c_length);

    // Normal forms are interned as integers so that the pair loop is cheap.
    std::map<Word, std::size_t> ids;
    auto id_of = [&ids, &pres](Word const& w) {
      auto nf = left_normal_form(w, pres).nf;
      return ids.emplace(std::move(nf), ids.size()).first->second;
    };
    std::vector<std::size_t> nf_ab;
    for (auto const& w : ab) {
      nf_ab.push_back(id_of(w));
    }

    std::vector<std::size_t> right(ab.size()), left(ab.size());
    for (auto const& c : cs) {
      for (std::size_t i = 0; i < ab.size(); ++i) {
        Word ac = ab[i];
        ac.insert(ac.end(), c.begin(), c.end());
        Word ca = c;
        ca.insert(ca.end(), ab[i].begin(), ab[i].end());
        right[i] = id_of(ac);
        left[i]  = id_of(ca);
      }
      for (std::size_t i = 0; i < ab.size(); ++i) {
        for (std::size_t j = 0; j < ab.size(); ++j) {
          report.checked += 2;
          if (nf_ab[i] == nf_ab[j]) {
            continue;
          }
          if (right[i] == right[j]) {
            report.violations.push_back(
                "right: (" + format_word(ab[i]) + ")(" + format_word(c) + ") = ("
                + format_word(ab[j]) + ")(" + format_word(c) + ")");
          }
          if (left[i] == left[j]) {
            report.violations.push_back(
                "left: (" + format_word(c) + ")(" + format_word(ab[i]) + ") = ("
                + format_word(c) + ")(" + format_word(ab[j]) + ")");
          }
        }
      }
    }
    return report;
  }

  SuiteReport codeterminism_suite(Presentation const& pres,
                                  std::size_t         max_length) {
    SuiteReport report{"codet", 0, {}};
    for (auto const& v : enumerate_elements(pres, max_length)) {
      ++report.checked;
      if (!check_codeterminism(v, pres)) {
        report.violations.push_back("two predecessors of " + format_word(v.nf)
                                    + " share a label");
      }
      for (auto const& x : pres.generators()) {
        if (multiply(v, {x}, pres).length() != v.length() + 1) {
          report.violations.push_back("edge " + format_word(v.nf) + " -"
                                      + x.token()
                                      + "-> does not increase length");
        }
      }
    }
    return report;
  }

  SuiteReport indegree_suite(Presentation const& pres, std::size_t max_length) {
    SuiteReport report{"indegree", 0, {}};
    for (auto const& v : enumerate_elements(pres, max_length)) {
      ++report.checked;
      auto const preds = predecessors(v, pres);
      bool const base  = is_intersection_base(v, pres);
      if ((preds.size() >= 2) != base) {
        report.violations.push_back(
            format_word(v.nf) + ": in-degree " + std::to_string(preds.size())
            + (base ? " but is" : " but is not") + " an intersection base");
      }
      if (base) {
        for (auto const& p : preds) {
          if (!pres.in_q(p.label)) {
            report.violations.push_back(format_word(v.nf) + ": entered by "
                                        + p.label.token() + ", not in Q");
          }
        }
      }
    }
    return report;
  }

}  // namespace malcev
