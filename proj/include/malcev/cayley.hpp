// Bounded portions of the right Cayley graph Cay(M; X), exact in-neighbourhoods
// computed from equality classes, and DOT export.

#ifndef MALCEV_CAYLEY_HPP_
#define MALCEV_CAYLEY_HPP_

#include <cstddef>   // for size_t
#include <map>       // for map
#include <optional>  // for optional
#include <string>    // for string
#include <vector>    // for vector

#include "presentation.hpp"  // for Presentation, Letter
#include "rewriting.hpp"     // for Element

namespace malcev {

  struct CayleyEdge {
    std::size_t source;  // index into CayleyBall::vertices
    Letter      label;
    std::size_t target;
  };

  class CayleyBall {
   public:
    [[nodiscard]] Element const& root() const noexcept {
      return _vertices.front();
    }

    [[nodiscard]] std::size_t radius() const noexcept {
      return _radius;
    }

    // Vertices in breadth-first order, root first.
    [[nodiscard]] std::vector<Element> const& vertices() const noexcept {
      return _vertices;
    }

    [[nodiscard]] std::size_t depth(std::size_t vertex) const {
      return _depth.at(vertex);
    }

    // Sorted by (source normal form, label).
    [[nodiscard]] std::vector<CayleyEdge> const& edges() const noexcept {
      return _edges;
    }

    [[nodiscard]] std::optional<std::size_t> find(Element const& e) const;

    friend CayleyBall build_ball(Element const&      root,
                                 std::size_t         radius,
                                 Presentation const& pres);

   private:
    std::size_t                       _radius = 0;
    std::vector<Element>              _vertices;
    std::vector<std::size_t>          _depth;
    std::vector<CayleyEdge>           _edges;
    std::map<Word, std::size_t>       _index;
  };

  //! All elements root * w with |w| <= radius, and the edges between them.
  CayleyBall build_ball(Element const&      root,
                        std::size_t         radius,
                        Presentation const& pres);

  struct Predecessor {
    Element source;
    Letter  label;

    friend bool operator==(Predecessor const&, Predecessor const&) = default;
  };

  //! Every (u, x) with u * x = v in the whole Cayley graph, sorted by
  //! (normal form of u, x).  Derived from the equality class of v.nf, so it
  //! does not depend on any ball.
  std::vector<Predecessor> predecessors(Element const&      v,
                                        Presentation const& pres);

  //! true iff no two distinct predecessors of v carry the same label.
  bool check_codeterminism(Element const& v, Presentation const& pres);

  //! Graphviz digraph; node ids are the '.'-joined tokens of the normal form.
  std::string export_dot(CayleyBall const& ball);

}  // namespace malcev

#endif  // MALCEV_CAYLEY_HPP_
