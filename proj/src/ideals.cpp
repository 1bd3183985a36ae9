#include "malcev/ideals.hpp"

#include <algorithm>      // for sort, set_intersection, max
#include <random>         // for mt19937_64, uniform_int_distribution
#include <set>            // for set
#include <unordered_set>  // for unordered_set

#include "malcev/cayley.hpp"      // for predecessors
#include "malcev/congruence.hpp"  // for left_divides, equality_class

namespace malcev {

  std::string_view to_string(IntersectionKind kind) noexcept {
    switch (kind) {
      case IntersectionKind::empty:
        return "Empty";
      case IntersectionKind::principal:
        return "Principal";
      case IntersectionKind::generators:
        return "Generators";
    }
    return "?";
  }

  std::string_view to_string(Provenance provenance) noexcept {
    switch (provenance) {
      case Provenance::reachable_p_to_q:
        return "reachable-p-to-q";
      case Provenance::reachable_q_to_p:
        return "reachable-q-to-p";
      case Provenance::base_search:
        return "base-search";
    }
    return "?";
  }

  std::size_t alignment_bound(Presentation const& pres) noexcept {
    return pres.n() >= 2 ? 1 : 2;
  }

  ////////////////////////////////////////////////////////////////////////
  // Fast path
  ////////////////////////////////////////////////////////////////////////

  IntersectionResult intersect_principal(Element const&      p,
                                         Element const&      q,
                                         Presentation const& pres) {
    if (left_divides(p.nf, q.nf, pres)) {
      return {IntersectionKind::principal, {q}, Provenance::reachable_p_to_q};
    }
    if (left_divides(q.nf, p.nf, pres)) {
      return {IntersectionKind::principal, {p}, Provenance::reachable_q_to_p};
    }

    std::set<Element> from_p, from_q;
    for (auto const& x : pres.q_set()) {
      from_p.insert(multiply(p, {x}, pres));
      from_q.insert(multiply(q, {x}, pres));
    }
    IntersectionResult result;
    result.provenance = Provenance::base_search;
    std::set_intersection(from_p.begin(),
                          from_p.end(),
                          from_q.begin(),
                          from_q.end(),
                          std::back_inserter(result.generators));

    if (result.generators.size() > alignment_bound(pres)) {
      std::string list;
      for (auto const& v : result.generators) {
        list += (list.empty() ? "" : ", ") + format_word(v.nf);
      }
      throw MalcevError(ErrorKind::alignment_violation,
                        std::to_string(result.generators.size())
                            + " intersection bases for p = " + format_word(p.nf)
                            + ", q = " + format_word(q.nf) + ": " + list);
    }
    switch (result.generators.size()) {
      case 0:
        result.kind = IntersectionKind::empty;
        break;
      case 1:
        result.kind = IntersectionKind::principal;
        break;
      default:
        result.kind = IntersectionKind::generators;
        break;
    }
    return result;
  }

  ////////////////////////////////////////////////////////////////////////
  // Windowed oracle
  ////////////////////////////////////////////////////////////////////////

  namespace {
    // Every element p * u with |p| + |u| <= window.
    std::set<Element> right_multiples(Element const&      p,
                                      std::size_t         window,
                                      Presentation const& pres) {
      std::set<Element> result;
      std::vector<Word> layer = {p.nf};
      result.insert(left_normal_form(p.nf, pres));
      for (std::size_t len = p.length(); len < window; ++len) {
        std::vector<Word> next;
        next.reserve(layer.size() * pres.generators().size());
        for (auto const& w : layer) {
          for (auto const& x : pres.generators()) {
            Word ext = w;
            ext.push_back(x);
            result.insert(left_normal_form(ext, pres));
            next.push_back(std::move(ext));
          }
        }
        layer = std::move(next);
      }
      return result;
    }
  }  // namespace

  WindowedIntersection brute_force_intersection(Element const&      p,
                                                Element const&      q,
                                                std::size_t         window,
                                                Presentation const& pres) {
    auto const longest = std::max(p.length(), q.length());
    if (window < longest + 1) {
      throw MalcevError(ErrorKind::window_too_small,
                        "window " + std::to_string(window) + " is below "
                            + std::to_string(longest + 1));
    }
    WindowedIntersection result;
    result.window = window;
    // Membership in qM is decided by exhaustive search, not by normal forms.
    for (auto const& e : right_multiples(p, window, pres)) {
      if (left_divides(q.nf, e.nf, pres)) {
        result.common.push_back(e);
      }
    }
    // e has a proper left divisor f in `common` iff some word equal to e has
    // a proper prefix equal to f.
    std::set<Word> common_nfs;
    for (auto const& e : result.common) {
      common_nfs.insert(e.nf);
    }
    for (auto const& e : result.common) {
      bool minimal = true;
      for (auto const& u : equality_class(e.nf, pres).members) {
        for (std::size_t k = 0; k < u.size() && minimal; ++k) {
          Word prefix(u.begin(), u.begin() + static_cast<std::ptrdiff_t>(k));
          if (common_nfs.count(left_normal_form(prefix, pres).nf) != 0) {
            minimal = false;
          }
        }
        if (!minimal) {
          break;
        }
      }
      if (minimal) {
        result.minimal.push_back(e);
      }
    }
    return result;
  }

  ////////////////////////////////////////////////////////////////////////
  // Alignment sweep
  ////////////////////////////////////////////////////////////////////////

  std::vector<Element> enumerate_elements(Presentation const& pres,
                                          std::size_t         max_length) {
    // Normal forms are closed under taking factors, so extending normal forms
    // one letter at a time reaches all of them.
    std::vector<Element> result = {Element{}};
    std::size_t          begin  = 0;
    for (std::size_t len = 0; len < max_length; ++len) {
      std::size_t const end = result.size();
      for (std::size_t i = begin; i < end; ++i) {
        for (auto const& x : pres.generators()) {
          Word const& w = result[i].nf;
          if (!w.empty() && pres.rewrite(w.back(), x)) {
            continue;
          }
          Word ext = w;
          ext.push_back(x);
          result.push_back(Element{std::move(ext)});
        }
      }
      begin = end;
    }
    return result;
  }

  bool AlignmentReport::ok() const noexcept {
    return violations.empty();
  }

  namespace {
    std::string pair_string(Element const& p, Element const& q) {
      return "p = " + format_word(p.nf) + ", q = " + format_word(q.nf);
    }

    bool divides(Element const& x, Element const& y, Presentation const& pres) {
      return left_divides(x.nf, y.nf, pres).has_value();
    }

    // Checks on a single fast-path result that need no oracle.
    void check_fast_result(Element const&            p,
                           Element const&            q,
                           IntersectionResult const& r,
                           Presentation const&       pres,
                           AlignmentReport&          report) {
      auto const where = pair_string(p, q);
      for (auto const& g : r.generators) {
        if (!divides(p, g, pres) || !divides(q, g, pres)) {
          report.violations.push_back(where + ": generator " + format_word(g.nf)
                                      + " is not a common right multiple");
        }
      }
      for (std::size_t i = 0; i < r.generators.size(); ++i) {
        for (std::size_t j = 0; j < r.generators.size(); ++j) {
          if (i != j && divides(r.generators[i], r.generators[j], pres)) {
            report.violations.push_back(where + ": generators are comparable");
          }
        }
      }
      if (r.provenance != Provenance::base_search) {
        return;
      }
      for (auto const& v : r.generators) {
        auto const preds = predecessors(v, pres);
        if (!is_intersection_base(v, pres) || preds.size() < 2) {
          report.violations.push_back(where + ": candidate " + format_word(v.nf)
                                      + " is not an intersection base");
        }
        for (auto const& pred : preds) {
          if (divides(p, pred.source, pres) && divides(q, pred.source, pres)) {
            report.violations.push_back(
                where + ": common multiple " + format_word(pred.source.nf)
                + " has an edge into " + format_word(v.nf));
          }
        }
      }
    }

    void check_against_oracle(Element const&            p,
                              Element const&            q,
                              IntersectionResult const& r,
                              std::size_t               window,
                              Presentation const&       pres,
                              AlignmentReport&          report) {
      auto const where  = pair_string(p, q) + " (window "
                         + std::to_string(window) + ")";
      auto const oracle = brute_force_intersection(p, q, window, pres);
      if (oracle.minimal != r.generators) {
        std::string fast, slow;
        for (auto const& g : r.generators) {
          fast += " " + format_word(g.nf, ".");
        }
        for (auto const& g : oracle.minimal) {
          slow += " " + format_word(g.nf, ".");
        }
        report.violations.push_back(where + ": fast generators {" + fast
                                    + " } != oracle minimal set {" + slow
                                    + " }");
      }
      for (auto const& w : oracle.common) {
        bool covered = std::any_of(
            r.generators.begin(), r.generators.end(), [&](Element const& g) {
              return divides(g, w, pres);
            });
        if (!covered) {
          report.violations.push_back(where + ": common multiple "
                                      + format_word(w.nf)
                                      + " is not generated by the result");
        }
      }
    }
  }  // namespace

  AlignmentReport verify_alignment(Presentation const&    pres,
                                   AlignmentConfig const& config) {
    if (config.window < config.max_length + 1) {
      throw MalcevError(ErrorKind::window_too_small,
                        "window " + std::to_string(config.window)
                            + " must be at least max length + 1 = "
                            + std::to_string(config.max_length + 1));
    }
    AlignmentReport report;
    report.n             = pres.n();
    report.config        = config;
    auto const elements  = enumerate_elements(pres, config.max_length);
    report.element_count = elements.size();

    struct Outcome {
      std::size_t        p, q;
      IntersectionResult result;
      bool               failed = false;
    };
    std::vector<Outcome> outcomes;
    outcomes.reserve(elements.size() * elements.size());

    for (std::size_t i = 0; i < elements.size(); ++i) {
      for (std::size_t j = 0; j < elements.size(); ++j) {
        Outcome o{i, j, {}};
        try {
          o.result = intersect_principal(elements[i], elements[j], pres);
        } catch (MalcevError const& e) {
          if (e.kind() != ErrorKind::alignment_violation) {
            throw;
          }
          report.violations.push_back(e.what());
          o.failed = true;
        }
        ++report.pair_count;
        if (!o.failed) {
          auto const& r         = o.result;
          report.max_generators = std::max(report.max_generators,
                                           r.generators.size());
          if (r.kind == IntersectionKind::empty) {
            ++report.empty_count;
          }
          if (r.provenance == Provenance::base_search) {
            ++report.base_search_count;
          }
          if (r.kind == IntersectionKind::generators) {
            report.non_principal.push_back(
                {elements[i], elements[j], r.generators});
          }
          check_fast_result(elements[i], elements[j], r, pres, report);
        }
        outcomes.push_back(std::move(o));
      }
    }
    if (report.max_generators > alignment_bound(pres)) {
      report.violations.push_back("maximum generator count "
                                  + std::to_string(report.max_generators)
                                  + " exceeds "
                                  + std::to_string(alignment_bound(pres)));
    }

    // Half of the samples are drawn from pairs with a non-empty intersection,
    // so that the oracle is not dominated by trivially empty pairs.
    std::vector<std::size_t> nonempty;
    for (std::size_t k = 0; k < outcomes.size(); ++k) {
      if (!outcomes[k].failed
          && outcomes[k].result.kind != IntersectionKind::empty) {
        nonempty.push_back(k);
      }
    }
    std::mt19937_64 rng(config.seed);
    auto const      slack = config.window - config.max_length;
    for (std::size_t s = 0; s < config.samples && !outcomes.empty(); ++s) {
      std::size_t k;
      if (s % 2 == 0 && !nonempty.empty()) {
        std::uniform_int_distribution<std::size_t> pick(0, nonempty.size() - 1);
        k = nonempty[pick(rng)];
      } else {
        std::uniform_int_distribution<std::size_t> pick(0, outcomes.size() - 1);
        k = pick(rng);
      }
      auto const& o = outcomes[k];
      if (o.failed) {
        continue;
      }
      auto const& p = elements[o.p];
      auto const& q = elements[o.q];
      check_against_oracle(
          p, q, o.result, std::max(p.length(), q.length()) + slack, pres, report);
      ++report.oracle_pairs;
    }
    return report;
  }

}  // namespace malcev
