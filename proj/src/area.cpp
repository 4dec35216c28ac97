#include "dehnlab/area.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <queue>
#include <sstream>

#include <absl/container/flat_hash_map.h>

#include "dehnlab/error.hpp"
#include "dehnlab/parse.hpp"

namespace dehnlab {

  SearchBudget SearchBudget::defaults_for(Word const& w) {
    SearchBudget b;
    b.max_state_length = 2 * w.size() + 16;
    return b;
  }

  namespace {
    // beta^-1 r^sign beta is the shift; beta is the first `rotation`
    // letters of r^sign.
    Word shift_offset(Presentation const& p, RelatorShift const& s) {
      Word r = s.sign > 0 ? p.relators()[s.relator]
                          : p.relators()[s.relator].inverse();
      return r.subword(0, s.rotation);
    }

    std::size_t max_conjugator(std::vector<AreaFactor> const& fs) {
      std::size_t m = 0;
      for (auto const& f : fs) {
        m = std::max(m, f.conjugator.size());
      }
      return m;
    }

    // Builds a certificate and fills in area and radius.
    AreaCertificate finish(Word const& w, std::vector<AreaFactor> factors) {
      AreaCertificate c;
      c.word    = w;
      c.area    = factors.size();
      c.radius  = max_conjugator(factors);
      c.factors = std::move(factors);
      return c;
    }

    struct Move {
      std::uint32_t position = 0;
      std::uint32_t shift    = 0;
      std::uint32_t matched  = 0;
    };

    struct Node {
      Word          word;  // canonical rotation
      std::uint32_t parent;
      Move          move;
      std::int64_t  cost;
    };

    // Replays a move path from w, producing one factor per move.
    std::vector<AreaFactor> replay(Presentation const& p, Word const& w,
                                   std::vector<Node> const&         nodes,
                                   std::vector<std::uint32_t> const& path) {
      auto                    start = cyclic_reduce(w);
      Word                    u     = start.conjugator;
      Word                    c     = start.linear_core;
      std::vector<AreaFactor> factors;
      for (std::size_t i = 1; i < path.size(); ++i) {
        Move const& mv = nodes[path[i]].move;
        // Rotate c onto the parent's canonical word, then by the move
        // position; the rotated-away prefix joins the conjugator.
        std::size_t const n = c.size();
        std::size_t const r = (least_rotation_index(c.letters()) + mv.position) % n;
        // c = XY becomes YX with u -> uX, or equally u -> uY^-1; keep the
        // shorter conjugator.
        Word via_x = free_reduce(u * c.subword(0, r));
        Word via_y = free_reduce(u * c.subword(r, n - r).inverse());
        u          = via_y.size() < via_x.size() ? via_y : via_x;
        c          = c.rotated(r);

        auto const& shift = p.shifts()[mv.shift];
        Word        beta  = shift_offset(p, shift);
        factors.push_back(AreaFactor{free_reduce(u * beta.inverse()),
                                     shift.relator, shift.sign});
        Word t
            = shift.letters.subword(mv.matched, shift.letters.size() - mv.matched)
                  .inverse();
        auto next = cyclic_reduce(t * c.subword(mv.matched, n - mv.matched));
        u         = free_reduce(u * next.conjugator);
        c         = next.linear_core;
      }
      return factors;
    }

    struct Heuristic {
      bool                                   enabled = false;
      std::vector<std::vector<std::int64_t>> coords;
      std::int64_t                           max_cell = 0;

      std::int64_t operator()(Word const& s) const {
        if (!enabled || max_cell == 0) {
          return 0;
        }
        std::int64_t a = std::abs(twice_signed_area(s.letters(), coords));
        return (a + max_cell - 1) / max_cell;
      }
    };
  }  // namespace

  AreaOutcome area_search(GroupContext const& ctx, Word const& w,
                          SearchBudget const& budget) {
    if (ctx.factor_count() != 1) {
      throw Error(ErrorKind::InvalidArgument,
                  "area search needs a single presentation");
    }
    if (budget.max_cost <= 0 || budget.max_state_length == 0
        || budget.max_states == 0) {
      throw Error(ErrorKind::InvalidArgument, "budget fields must be positive");
    }
    Presentation const& p = ctx.presentation();
    if (!ctx.is_trivial(w)) {
      return NotNullHomotopic{"word is not trivial in the group"};
    }

    Heuristic h;
    if (p.abelian_exact() && p.abelian_rank() == 2) {
      h.enabled = true;
      h.coords  = p.abelian_coordinates();
      for (auto const& r : p.relators()) {
        h.max_cell = std::max(h.max_cell,
                              std::abs(twice_signed_area(r.letters(), h.coords)));
      }
    }

    std::vector<Node>                                 nodes;
    absl::flat_hash_map<Word, std::uint32_t, WordHash> index;
    auto const start = cyclic_reduce(w).core.canonical_rotation();
    nodes.push_back(Node{start, 0, {}, 0});
    index.emplace(start, 0);

    // (f, state); ties go to the deeper state, then lexicographic order.
    using Entry = std::pair<std::int64_t, std::uint32_t>;
    auto later  = [&](Entry const& x, Entry const& y) {
      if (x.first != y.first) {
        return x.first > y.first;
      }
      if (nodes[x.second].cost != nodes[y.second].cost) {
        return nodes[x.second].cost < nodes[y.second].cost;
      }
      return nodes[y.second].word < nodes[x.second].word;
    };
    std::priority_queue<Entry, std::vector<Entry>, decltype(later)> open(later);
    open.emplace(h(start), 0);
    std::vector<bool> closed(1, false);
    bool              pruned = false;

    while (!open.empty()) {
      auto [f, id] = open.top();
      open.pop();
      if (closed[id]) {
        continue;
      }
      closed[id]              = true;
      Word const         s    = nodes[id].word;
      std::int64_t const cost = nodes[id].cost;
      if (s.empty()) {
        std::vector<std::uint32_t> path;
        for (std::uint32_t x = id; x != 0; x = nodes[x].parent) {
          path.push_back(x);
        }
        path.push_back(0);
        std::reverse(path.begin(), path.end());
        return finish(w, replay(p, w, nodes, path));
      }
      std::size_t const n = s.size();
      for (std::size_t pos = 0; pos < n; ++pos) {
        for (std::size_t sh : p.shifts_starting_with(s[pos])) {
          auto const&       rho   = p.shifts()[sh].letters;
          std::size_t const limit = std::min(n, rho.size());
          std::size_t       match = 0;
          while (match < limit && s[(pos + match) % n] == rho[match]) {
            ++match;
          }
          for (std::size_t k = 1; k <= match; ++k) {
            std::vector<Letter> next;
            next.reserve(rho.size() - k + n - k);
            for (std::size_t j = rho.size(); j > k; --j) {
              next.push_back(rho[j - 1].inverse());
            }
            for (std::size_t j = k; j < n; ++j) {
              next.push_back(s[(pos + j) % n]);
            }
            Word child = cyclic_reduce(Word(std::move(next)))
                             .core.canonical_rotation();
            if (child.size() > budget.max_state_length) {
              pruned = true;
              continue;
            }
            std::int64_t const g  = cost + 1;
            std::int64_t const fc = g + h(child);
            if (fc > budget.max_cost) {
              pruned = true;
              continue;
            }
            auto it = index.find(child);
            if (it != index.end()) {
              Node& old = nodes[it->second];
              if (!closed[it->second] && g < old.cost) {
                old.cost   = g;
                old.parent = id;
                old.move   = Move{std::uint32_t(pos), std::uint32_t(sh),
                                  std::uint32_t(k)};
                open.emplace(fc, it->second);
              }
              continue;
            }
            if (nodes.size() >= budget.max_states) {
              return Inconclusive{"state limit reached", nodes.size()};
            }
            auto nid = static_cast<std::uint32_t>(nodes.size());
            nodes.push_back(Node{
                child, id,
                Move{std::uint32_t(pos), std::uint32_t(sh), std::uint32_t(k)},
                g});
            closed.push_back(false);
            index.emplace(std::move(child), nid);
            open.emplace(fc, nid);
          }
        }
      }
    }
    return Inconclusive{pruned ? "cost or length limit reached"
                               : "search space exhausted",
                        nodes.size()};
  }

  bool validate_certificate(AreaCertificate const& c, Presentation const& p) {
    if (c.area != c.factors.size() || c.radius != max_conjugator(c.factors)) {
      return false;
    }
    std::vector<Letter> product;
    for (auto const& f : c.factors) {
      if (f.relator >= p.relators().size() || (f.sign != 1 && f.sign != -1)
          || !p.alphabet().contains(f.conjugator)) {
        return false;
      }
      Word const& r = p.relators()[f.relator];
      Word        x = f.conjugator * (f.sign > 0 ? r : r.inverse())
               * f.conjugator.inverse();
      product.insert(product.end(), x.begin(), x.end());
    }
    return free_reduce(product) == free_reduce(c.word);
  }

  std::int64_t
  twice_signed_area(std::span<Letter const>                       w,
                    std::vector<std::vector<std::int64_t>> const& coords) {
    std::int64_t x = 0, y = 0, twice = 0;
    for (Letter l : w) {
      auto const& v = coords.at(l.generator());
      if (v.size() != 2) {
        throw Error(ErrorKind::InvalidArgument, "coordinates must be 2-vectors");
      }
      std::int64_t dx = l.sign() * v[0], dy = l.sign() * v[1];
      // Shoelace term for the segment (x,y) -> (x+dx, y+dy).
      twice += x * (y + dy) - (x + dx) * y;
      x += dx;
      y += dy;
    }
    if (x != 0 || y != 0) {
      throw Error(ErrorKind::NotClosed, "lattice path does not close");
    }
    return twice;
  }

  std::int64_t signed_lattice_area(Word const& w) {
    for (Letter l : w) {
      if (l.generator() > 1) {
        throw Error(ErrorKind::InvalidArgument,
                    "lattice area needs a word in two generators");
      }
    }
    return twice_signed_area(w.letters(), {{1, 0}, {0, 1}}) / 2;
  }

  AreaCertificate dehn_greedy_area_upper(GroupContext const& ctx,
                                         Word const&         w) {
    if (ctx.factor_count() != 1) {
      throw Error(ErrorKind::InvalidArgument,
                  "greedy area needs a single presentation");
    }
    Presentation const&     p = ctx.presentation();
    std::vector<AreaFactor> factors;
    DehnObserver            record = [&](std::span<Letter const> prefix,
                              std::size_t shift, std::size_t) {
      auto const& s    = p.shifts()[shift];
      Word        beta = shift_offset(p, s);
      factors.push_back(AreaFactor{free_reduce(Word(prefix) * beta.inverse()),
                                   s.relator, s.sign});
    };
    Word rest = dehn_reduce(p, w.letters(), &record);
    if (!rest.empty()) {
      throw Error(ErrorKind::NotTrivial,
                  "Dehn reduction stalls at " + to_string(rest, p.alphabet()));
    }
    return finish(w, std::move(factors));
  }

  AreaRadiusWitness area_radius_witness(AreaCertificate const& c,
                                        Presentation const&    p) {
    if (!validate_certificate(c, p)) {
      throw Error(ErrorKind::InvalidCertificate,
                  "certificate does not validate");
    }
    std::size_t bound = p.max_relator_length() * c.area + c.word.size();
    return {c.area, c.radius, bound, c.radius <= bound};
  }

  AreaRadiusPair::AreaRadiusPair(Rational alpha_exponent, Rational rho_exponent)
      : _alpha(alpha_exponent), _rho(rho_exponent) {
    if (_alpha < Rational(1) || _rho < Rational(1)) {
      throw Error(ErrorKind::InvalidArgument,
                  "area-radius exponents must be at least 1");
    }
  }

  Rational isoperimetric_exponent_bound(std::vector<AreaRadiusPair> const& pairs,
                                        std::size_t rank_m, std::size_t r) {
    if (r < 3) {
      throw Error(ErrorKind::TooFewFactors,
                  "the bound needs at least three factors, got "
                      + std::to_string(r));
    }
    if (pairs.size() != r) {
      throw Error(ErrorKind::FactorCountMismatch,
                  "one area-radius pair per factor required");
    }
    Rational alpha(2), rho(1);
    for (auto const& q : pairs) {
      alpha = std::max(alpha, q.alpha_exponent());
      rho   = std::max(rho, q.rho_exponent());
    }
    return Rational(2 * static_cast<std::int64_t>(rank_m)) * rho + alpha;
  }

  void write_certificate(std::ostream& out, AreaCertificate const& c,
                         Alphabet const& alphabet) {
    out << "word " << to_string(c.word, alphabet) << " area " << c.area
        << " radius " << c.radius << '\n';
    for (auto const& f : c.factors) {
      out << "conj " << to_string(f.conjugator, alphabet) << " rel "
          << f.relator << " sign " << (f.sign > 0 ? '+' : '-') << '\n';
    }
  }

  namespace {
    // Splits "<key> <expr> <k1> <v1> <k2> <v2>" into expr and the two values.
    bool split_line(std::string const& line, std::string_view key,
                    std::string_view k1, std::string_view k2,
                    std::string& expr, std::string& v1, std::string& v2) {
      if (line.rfind(std::string(key) + " ", 0) != 0) {
        return false;
      }
      auto p1 = line.rfind(" " + std::string(k1) + " ");
      if (p1 == std::string::npos || p1 < key.size()) {
        return false;
      }
      auto p2 = line.find(" " + std::string(k2) + " ", p1 + 1);
      if (p2 == std::string::npos) {
        return false;
      }
      expr = line.substr(key.size() + 1, p1 - key.size() - 1);
      v1   = line.substr(p1 + k1.size() + 2, p2 - p1 - k1.size() - 2);
      v2   = line.substr(p2 + k2.size() + 2);
      return true;
    }

    std::size_t parse_count(std::string const& s) {
      if (s.empty()
          || !std::all_of(s.begin(), s.end(), [](char ch) {
               return ch >= '0' && ch <= '9';
             })) {
        throw Error(ErrorKind::SyntaxError, "expected a count, got '" + s + "'");
      }
      return std::stoull(s);
    }
  }  // namespace

  AreaCertificate read_certificate(std::istream& in, Alphabet const& alphabet) {
    std::string line, expr, a, b;
    if (!std::getline(in, line)
        || !split_line(line, "word", "area", "radius", expr, a, b)) {
      throw Error(ErrorKind::SyntaxError, "missing certificate header");
    }
    AreaCertificate c;
    c.word   = parse_word(expr, alphabet);
    c.area   = parse_count(a);
    c.radius = parse_count(b);
    while (std::getline(in, line)) {
      if (line.empty()) {
        continue;
      }
      if (!split_line(line, "conj", "rel", "sign", expr, a, b)
          || (b != "+" && b != "-")) {
        throw Error(ErrorKind::SyntaxError, "malformed factor line: " + line);
      }
      c.factors.push_back(
          AreaFactor{parse_word(expr, alphabet), parse_count(a), b == "+" ? 1 : -1});
    }
    return c;
  }

}  // namespace dehnlab
