#include "malcev/cayley.hpp"

#include <algorithm>  // for sort, unique, adjacent_find
#include <set>        // for set
#include <sstream>    // for ostringstream
#include <tuple>      // for tie

#include "malcev/congruence.hpp"  // for equality_class

namespace malcev {

  std::optional<std::size_t> CayleyBall::find(Element const& e) const {
    auto it = _index.find(e.nf);
    if (it == _index.end()) {
      return std::nullopt;
    }
    return it->second;
  }

  CayleyBall build_ball(Element const&      root,
                        std::size_t         radius,
                        Presentation const& pres) {
    CayleyBall ball;
    ball._radius = radius;
    ball._vertices.push_back(left_normal_form(root.nf, pres));
    ball._depth.push_back(0);
    ball._index.emplace(ball._vertices.front().nf, 0);

    for (std::size_t next = 0; next < ball._vertices.size(); ++next) {
      if (ball._depth[next] == radius) {
        // Normal forms at depth d all have length |root| + d, so nothing at
        // the outer layer has an out-edge that stays inside the ball.
        continue;
      }
      for (auto const& x : pres.generators()) {
        Element v = multiply(ball._vertices[next], {x}, pres);
        auto [it, inserted] = ball._index.emplace(v.nf, ball._vertices.size());
        if (inserted) {
          ball._vertices.push_back(std::move(v));
          ball._depth.push_back(ball._depth[next] + 1);
        }
        ball._edges.push_back({next, x, it->second});
      }
    }
    auto const& vs = ball._vertices;
    std::sort(ball._edges.begin(),
              ball._edges.end(),
              [&vs](CayleyEdge const& e, CayleyEdge const& f) {
                if (vs[e.source].nf != vs[f.source].nf) {
                  return shortlex_less(vs[e.source].nf, vs[f.source].nf);
                }
                return e.label < f.label;
              });
    return ball;
  }

  std::vector<Predecessor> predecessors(Element const&      v,
                                        Presentation const& pres) {
    std::vector<Predecessor> result;
    if (v.nf.empty()) {
      return result;
    }
    std::set<std::pair<Word, Letter>> seen;
    for (auto const& u : equality_class(v.nf, pres).members) {
      Word prefix(u.begin(), u.end() - 1);
      auto source = left_normal_form(prefix, pres);
      if (seen.emplace(source.nf, u.back()).second) {
        result.push_back({std::move(source), u.back()});
      }
    }
    std::sort(result.begin(),
              result.end(),
              [](Predecessor const& x, Predecessor const& y) {
                if (x.source.nf != y.source.nf) {
                  return shortlex_less(x.source.nf, y.source.nf);
                }
                return x.label < y.label;
              });
    return result;
  }

  bool check_codeterminism(Element const& v, Presentation const& pres) {
    auto preds = predecessors(v, pres);
    std::vector<Letter> labels;
    for (auto const& p : preds) {
      labels.push_back(p.label);
    }
    std::sort(labels.begin(), labels.end());
    return std::adjacent_find(labels.begin(), labels.end()) == labels.end();
  }

  std::string export_dot(CayleyBall const& ball) {
    std::ostringstream out;
    auto name = [](Element const& e) {
      return "\"" + format_word(e.nf, ".") + "\"";
    };
    out << "digraph cayley {\n";
    for (auto const& v : ball.vertices()) {
      out << "  " << name(v) << ";\n";
    }
    for (auto const& e : ball.edges()) {
      out << "  " << name(ball.vertices()[e.source]) << " -> "
          << name(ball.vertices()[e.target]) << " [label=\"" << e.label.token()
          << "\"];\n";
    }
    out << "}\n";
    return out.str();
  }

}  // namespace malcev
