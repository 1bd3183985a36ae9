#include "malcev/group_derivation.hpp"

#include <algorithm>  // for reverse, equal

namespace malcev {

  GroupWord to_group_word(Word const& w) {
    GroupWord g;
    g.reserve(w.size());
    for (auto const& x : w) {
      g.push_back({x, 1});
    }
    return g;
  }

  GroupWord formal_inverse(GroupWord const& g) {
    GroupWord result;
    result.reserve(g.size());
    for (auto it = g.rbegin(); it != g.rend(); ++it) {
      result.push_back(it->inverse());
    }
    return result;
  }

  std::string format_group_word(GroupWord const& g) {
    if (g.empty()) {
      return "1";
    }
    std::string out;
    for (auto const& s : g) {
      if (!out.empty()) {
        out += ' ';
      }
      out += s.letter.token();
      if (s.sign < 0) {
        out += "^-1";
      }
    }
    return out;
  }

  GroupWord free_reduce(GroupWord const& g) {
    GroupWord stack;
    stack.reserve(g.size());
    for (auto const& s : g) {
      if (!stack.empty() && stack.back() == s.inverse()) {
        stack.pop_back();
      } else {
        stack.push_back(s);
      }
    }
    return stack;
  }

  std::map<Letter, int> exponent_sums(GroupWord const& g) {
    std::map<Letter, int> sums;
    for (auto const& s : g) {
      sums[s.letter] += s.sign;
    }
    std::erase_if(sums, [](auto const& kv) { return kv.second == 0; });
    return sums;
  }

  ////////////////////////////////////////////////////////////////////////
  // Moves
  ////////////////////////////////////////////////////////////////////////

  namespace {
    template <class... Ts>
    struct overloaded : Ts... {
      using Ts::operator()...;
    };
    template <class... Ts>
    overloaded(Ts...) -> overloaded<Ts...>;

    Relation const& relation_at(Presentation const& pres, std::size_t index) {
      if (index >= pres.relations().size()) {
        throw MalcevError(ErrorKind::occurrence_mismatch,
                          "relation index " + std::to_string(index)
                              + " out of range");
      }
      return pres.relations()[index];
    }

    // The (pattern, replacement) pair a substitution works with.
    std::pair<GroupWord, GroupWord> subst_sides(RelatorSubst const& s,
                                                Presentation const& pres) {
      auto const& rel = relation_at(pres, s.relation);
      GroupWord   from, to;
      if (s.direction == Direction::left_to_right) {
        from = to_group_word(rel.left);
        to   = to_group_word(rel.right);
      } else {
        from = to_group_word(rel.right);
        to   = to_group_word(rel.left);
      }
      if (s.inverted) {
        from = formal_inverse(from);
        to   = formal_inverse(to);
      }
      return {from, to};
    }

    [[noreturn]] void mismatch(std::string const& what, GroupWord const& g) {
      throw MalcevError(ErrorKind::occurrence_mismatch,
                        what + " in " + format_group_word(g));
    }

    std::size_t find_relation(Presentation const& pres,
                              Word const&         left,
                              Word const&         right) {
      auto const& rels = pres.relations();
      for (std::size_t i = 0; i < rels.size(); ++i) {
        if (rels[i].left == left && rels[i].right == right) {
          return i;
        }
      }
      throw MalcevError(ErrorKind::invalid_argument,
                        "relation (" + format_word(left, "") + ", "
                            + format_word(right, "")
                            + ") is not in the presentation");
    }
  }  // namespace

  std::string describe(Move const& move, Presentation const& pres) {
    return std::visit(
        overloaded{
            [](FreeInsert const& m) {
              SignedLetter first{m.letter, m.first_sign};
              return "insert " + format_group_word({first, first.inverse()})
                     + " at " + std::to_string(m.position);
            },
            [](FreeCancel const& m) {
              return "cancel at " + std::to_string(m.position);
            },
            [&pres](RelatorSubst const& m) {
              auto [from, to] = subst_sides(m, pres);
              return "substitute " + format_group_word(from) + " -> "
                     + format_group_word(to) + " at "
                     + std::to_string(m.position) + " (relation "
                     + std::to_string(m.relation)
                     + (m.inverted ? ", inverted)" : ")");
            }},
        move);
  }

  GroupWord apply_move(GroupWord const&    g,
                       Move const&         move,
                       Presentation const& pres) {
    return std::visit(
        overloaded{
            [&g](FreeInsert const& m) {
              if (m.position > g.size() || (m.first_sign != 1 && m.first_sign != -1)) {
                mismatch("cannot insert at " + std::to_string(m.position), g);
              }
              SignedLetter first{m.letter, m.first_sign};
              GroupWord    out = g;
              auto         pos = out.begin() + static_cast<std::ptrdiff_t>(m.position);
              out.insert(pos, {first, first.inverse()});
              return out;
            },
            [&g](FreeCancel const& m) {
              if (m.position + 1 >= g.size()
                  || g[m.position] != g[m.position + 1].inverse()) {
                mismatch("no inverse pair at " + std::to_string(m.position), g);
              }
              GroupWord out = g;
              auto      pos = out.begin() + static_cast<std::ptrdiff_t>(m.position);
              out.erase(pos, pos + 2);
              return out;
            },
            [&g, &pres](RelatorSubst const& m) {
              auto [from, to] = subst_sides(m, pres);
              if (m.position + from.size() > g.size()
                  || !std::equal(from.begin(),
                                 from.end(),
                                 g.begin() + static_cast<std::ptrdiff_t>(m.position))) {
                mismatch(format_group_word(from) + " does not occur at "
                             + std::to_string(m.position),
                         g);
              }
              GroupWord out = g;
              std::copy(to.begin(),
                        to.end(),
                        out.begin() + static_cast<std::ptrdiff_t>(m.position));
              return out;
            }},
        move);
  }

  GroupWord apply_step(GroupWord const&      g,
                       DerivationStep const& step,
                       Presentation const&   pres) {
    return apply_move(g, step.move, pres);
  }

  ////////////////////////////////////////////////////////////////////////
  // The obstruction
  ////////////////////////////////////////////////////////////////////////

  std::vector<DerivationStep> build_obstruction_script(Presentation const& pres) {
    using namespace letters;
    if (!pres.is_malcev()) {
      throw MalcevError(ErrorKind::invalid_argument,
                        "the obstruction script needs a Malcev presentation");
    }
    auto const n = static_cast<std::uint32_t>(pres.n());

    std::vector<DerivationStep> steps;
    GroupWord                   current = to_group_word({c, a});
    auto                        push    = [&](Move move) {
      GroupWord next = apply_move(current, move, pres);
      steps.push_back({move, current, next});
      current = std::move(next);
    };

    // c a = c (b b^-1) (d^-1 d) a = (cb)(db)^-1(da)
    push(FreeInsert{1, b, 1});
    push(FreeInsert{3, d, -1});
    // = (B_n D_n)(A_n D_n)^-1(A_1 C_1)
    push(RelatorSubst{0, find_relation(pres, {c, b}, {B(n), D(n)}),
                      Direction::left_to_right, false});
    push(RelatorSubst{2, find_relation(pres, {A(n), D(n)}, {d, b}),
                      Direction::right_to_left, true});
    push(RelatorSubst{4, find_relation(pres, {d, a}, {A(1), C(1)}),
                      Direction::left_to_right, false});
    // = B_n A_n^-1 A_1 C_1
    push(FreeCancel{1});
    // B_k A_k^-1 = B_k C_k (A_k C_k)^-1 = (B_{k-1} D_{k-1})(A_{k-1} D_{k-1})^-1
    //            = B_{k-1} A_{k-1}^-1
    for (std::uint32_t k = n; k >= 2; --k) {
      push(FreeInsert{1, C(k), 1});
      push(RelatorSubst{0, find_relation(pres, {B(k), C(k)}, {B(k - 1), D(k - 1)}),
                        Direction::left_to_right, false});
      push(RelatorSubst{2, find_relation(pres, {A(k - 1), D(k - 1)}, {A(k), C(k)}),
                        Direction::right_to_left, true});
      push(FreeCancel{1});
    }
    // B_1 A_1^-1 A_1 C_1 = B_1 C_1
    push(FreeCancel{1});
    return steps;
  }

  ObstructionCertificate check_obstruction(Presentation const&                pres,
                                           std::vector<DerivationStep> const& steps) {
    using namespace letters;
    auto fail = [](ErrorKind kind, std::size_t i, std::string const& what) {
      return MalcevError(kind, "step " + std::to_string(i) + ": " + what);
    };
    GroupWord const source = to_group_word({c, a});
    GroupWord const target = to_group_word({B(1), C(1)});

    GroupWord current = source;
    for (std::size_t i = 0; i < steps.size(); ++i) {
      auto const& step = steps[i];
      if (step.before != current) {
        throw fail(ErrorKind::broken_chain, i,
                   "starts from " + format_group_word(step.before)
                       + " but the previous step ended at "
                       + format_group_word(current));
      }
      GroupWord next;
      try {
        next = apply_step(current, step, pres);
      } catch (MalcevError const& e) {
        throw fail(e.kind(), i, e.what());
      }
      if (next != step.after) {
        throw fail(ErrorKind::broken_chain, i,
                   "records " + format_group_word(step.after) + " but yields "
                       + format_group_word(next));
      }
      current = std::move(next);
    }
    if (free_reduce(current) != target) {
      throw fail(ErrorKind::broken_chain, steps.size(),
                 "derivation ends at " + format_group_word(current)
                     + ", not B1 C1");
    }

    ObstructionCertificate cert;
    cert.n         = pres.n();
    cert.steps     = steps;
    cert.source_nf = left_normal_form({c, a}, pres);
    cert.target_nf = left_normal_form({B(1), C(1)}, pres);
    if (cert.source_nf == cert.target_nf) {
      throw MalcevError(ErrorKind::broken_chain,
                        "c a and B1 C1 are equal in the monoid; no obstruction");
    }
    return cert;
  }

  ObstructionCertificate verify_obstruction(Presentation const& pres) {
    return check_obstruction(pres, build_obstruction_script(pres));
  }

}  // namespace malcev
