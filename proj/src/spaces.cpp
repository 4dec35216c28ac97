#include "dehnlab/spaces.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>

#include <fmt/format.h>

#include "dehnlab/error.hpp"

namespace dehnlab {

  namespace {
    constexpr std::uint32_t unset = std::numeric_limits<std::uint32_t>::max();

    void check_generators(std::vector<DirectedGenerator> const& dirs,
                          GeneratingSet const&                  gens,
                          MembershipOracle const&               oracle) {
      if (!oracle) {
        return;
      }
      for (auto const& d : dirs) {
        if (!oracle(d.element)) {
          throw Error(ErrorKind::MembershipViolation,
                      "generator " + gens.elements[d.index].label
                          + " is not in the subgroup");
        }
      }
    }
  }  // namespace

  std::vector<DirectedGenerator> directed_generators(GroupContext const& ctx,
                                                     GeneratingSet const& gens) {
    std::vector<DirectedGenerator> out;
    InternTable                    seen(ctx);
    seen.insert(ctx.identity());
    for (std::size_t i = 0; i < gens.elements.size(); ++i) {
      auto const& g = gens.elements[i].element;
      for (int sign : {1, -1}) {
        TupleElement x = ctx.reduce(sign > 0 ? g : ctx.inverse(g));
        if (seen.insert(x).inserted) {
          out.push_back(DirectedGenerator{i, sign, std::move(x)});
        }
      }
    }
    return out;
  }

  std::vector<std::string> Ball::geodesic(std::uint32_t        id,
                                          GeneratingSet const& gens) const {
    std::vector<std::string> out;
    for (std::uint32_t x = id; via[x] != unset; x = parent[x]) {
      auto const& d = generators[via[x]];
      out.push_back(gens.elements[d.index].label + (d.sign > 0 ? "" : "^-1"));
    }
    std::reverse(out.begin(), out.end());
    return out;
  }

  Ball ball(GroupContext const& ctx, GeneratingSet const& gens,
            std::size_t radius, BallOptions const& options) {
    Ball b(ctx);
    b.generators = directed_generators(ctx, gens);
    check_generators(b.generators, gens, options.oracle);
    b.table.insert(ctx.identity());
    b.length.push_back(0);
    b.parent.push_back(unset);
    b.via.push_back(unset);
    b.growth.push_back({0, 1, 1});
    std::vector<std::uint32_t> frontier{0};
    for (std::size_t r = 1; r <= radius; ++r) {
      std::vector<std::uint32_t> next;
      for (std::uint32_t x : frontier) {
        TupleElement const g = b.table.element(x);
        for (std::size_t k = 0; k < b.generators.size(); ++k) {
          auto res = b.table.insert(ctx.multiply(g, b.generators[k].element));
          if (!res.inserted) {
            continue;
          }
          if (b.table.size() > options.max_states) {
            throw Error(ErrorKind::StateLimit,
                        fmt::format("ball exceeds {} elements at radius {}",
                                    options.max_states, r));
          }
          b.length.push_back(static_cast<std::uint32_t>(r));
          b.parent.push_back(x);
          b.via.push_back(static_cast<std::uint32_t>(k));
          next.push_back(res.id);
        }
      }
      b.growth.push_back({r, next.size(), b.growth.back().ball + next.size()});
      frontier = std::move(next);
    }
    return b;
  }

  LengthOutcome word_length(GroupContext const& ctx, GeneratingSet const& gens,
                            TupleElement const& g, LengthBudget const& budget,
                            MembershipOracle const& oracle) {
    auto const dirs = directed_generators(ctx, gens);
    check_generators(dirs, gens, oracle);
    if (oracle && !oracle(g)) {
      throw Error(ErrorKind::MembershipViolation,
                  "element is not in the subgroup");
    }
    InternTable                table(ctx);
    std::vector<std::uint32_t> dist[2];  // 0: from identity, 1: from g
    auto                       label = [&](std::uint32_t id, int side,
                         std::uint32_t d) {
      if (id >= dist[0].size()) {
        dist[0].resize(id + 1, unset);
        dist[1].resize(id + 1, unset);
      }
      if (dist[side][id] != unset) {
        return false;
      }
      dist[side][id] = d;
      return true;
    };
    auto const start  = table.insert(ctx.identity()).id;
    auto const target = table.insert(ctx.reduce(g)).id;
    label(start, 0, 0);
    label(target, 1, 0);
    if (start == target) {
      return std::size_t{0};
    }
    std::vector<std::uint32_t> frontier[2]{{start}, {target}};
    std::uint32_t              level[2]{0, 0};
    while (true) {
      int const side = frontier[0].size() <= frontier[1].size() ? 0 : 1;
      if (frontier[side].empty()) {
        return Inconclusive{"element is not reachable from the generators",
                            table.size()};
      }
      if (level[0] + level[1] >= budget.max_radius) {
        return Inconclusive{"radius limit reached", table.size()};
      }
      std::uint32_t const        d    = level[side] + 1;
      std::uint32_t              best = unset;
      std::vector<std::uint32_t> next;
      for (std::uint32_t x : frontier[side]) {
        TupleElement const e = table.element(x);
        for (auto const& s : dirs) {
          auto const id = table.insert(ctx.multiply(e, s.element)).id;
          if (table.size() > budget.max_states) {
            return Inconclusive{"state limit reached", table.size()};
          }
          if (!label(id, side, d)) {
            continue;
          }
          next.push_back(id);
          if (dist[1 - side][id] != unset) {
            best = std::min(best, d + dist[1 - side][id]);
          }
        }
      }
      if (best != unset) {
        return std::size_t{best};
      }
      frontier[side] = std::move(next);
      level[side]    = d;
    }
  }

  LengthOutcome unidirectional_length(GroupContext const&  ctx,
                                      GeneratingSet const& gens,
                                      TupleElement const&  g,
                                      LengthBudget const&  budget) {
    auto const   dirs = directed_generators(ctx, gens);
    InternTable  table(ctx);
    TupleElement target = ctx.reduce(g);
    table.insert(ctx.identity());
    if (ctx.is_trivial(target)) {
      return std::size_t{0};
    }
    std::vector<std::uint32_t> frontier{0};
    for (std::size_t r = 1; r <= budget.max_radius; ++r) {
      std::vector<std::uint32_t> next;
      for (std::uint32_t x : frontier) {
        TupleElement const e = table.element(x);
        for (auto const& s : dirs) {
          TupleElement y   = ctx.multiply(e, s.element);
          auto const   res = table.insert(y);
          if (!res.inserted) {
            continue;
          }
          if (ctx.equal(y, target)) {
            return r;
          }
          if (table.size() > budget.max_states) {
            return Inconclusive{"state limit reached", table.size()};
          }
          next.push_back(res.id);
        }
      }
      if (next.empty()) {
        return Inconclusive{"element is not reachable from the generators",
                            table.size()};
      }
      frontier = std::move(next);
    }
    return Inconclusive{"radius limit reached", table.size()};
  }

  SubgroupMetric::SubgroupMetric(GroupContext const& ctx, GeneratingSet gens,
                                 std::size_t        cached_radius,
                                 BallOptions const& options)
      : _ctx(&ctx),
        _gens(std::move(gens)),
        _radius(cached_radius),
        _oracle(options.oracle),
        _ball(ball(ctx, _gens, cached_radius, options)) {}

  LengthOutcome SubgroupMetric::length(TupleElement const& g,
                                       LengthBudget const& budget) const {
    if (_oracle && !_oracle(g)) {
      throw Error(ErrorKind::MembershipViolation,
                  "element is not in the subgroup");
    }
    TupleElement const target = _ctx->reduce(g);
    if (auto id = _ball.table.find(target)) {
      return std::size_t{_ball.length[*id]};
    }
    // Depth-first search over generator sequences from the target, without
    // storing what it visits. After finishing depth j every geodesic of
    // length <= R + j has met the cached ball, so the best meeting found is
    // exact once it is at most R + j.
    auto const&       gens = _ball.generators;
    std::size_t const k    = gens.size();
    std::vector<std::size_t> inverse(k, k);
    for (std::size_t a = 0; a < k; ++a) {
      for (std::size_t b = 0; b < k; ++b) {
        if (gens[a].index == gens[b].index && gens[a].sign == -gens[b].sign) {
          inverse[a] = b;
        }
      }
    }
    // Where bucket keys follow products, nodes carry only signatures and a
    // word is built when a key hits the ball.
    bool const                           lazy = _ctx->has_signatures();
    std::vector<GroupContext::Signature> gen_sig;
    if (lazy) {
      for (auto const& x : gens) {
        gen_sig.push_back(_ctx->signature(x.element));
      }
    }
    auto lookup = [&](TupleElement const& y) -> std::optional<std::size_t> {
      if (auto id = _ball.table.find(y)) {
        return _ball.length[*id];
      }
      return std::nullopt;
    };

    std::size_t best   = std::numeric_limits<std::size_t>::max();
    std::size_t visits = 0;
    std::vector<TupleElement>            stack;
    std::vector<GroupContext::Signature> sigs;
    std::vector<std::size_t>             choice;
    for (std::size_t j = 1; _radius + j <= budget.max_radius; ++j) {
      stack.assign(1, target);
      sigs.assign(1, lazy ? _ctx->signature(target) : GroupContext::Signature{});
      choice.assign(1, 0);
      // choice[d] is the next generator to try at depth d.
      while (!choice.empty()) {
        std::size_t const d = choice.size() - 1;
        if (choice[d] == k) {
          if (!lazy) {
            stack.pop_back();
          }
          sigs.pop_back();
          choice.pop_back();
          continue;
        }
        std::size_t const s = choice[d]++;
        if (d > 0 && inverse[s] == choice[d - 1] - 1) {
          continue;
        }
        if (++visits > budget.max_states) {
          return Inconclusive{"state limit reached", visits};
        }
        if (lazy) {
          GroupContext::Signature sig = sigs[d];
          _ctx->multiply_signature(sig, gen_sig[s]);
          if (d + 1 == j) {
            if (_ball.table.has_bucket(_ctx->bucket_key(sig))) {
              TupleElement y = target;
              for (std::size_t i = 0; i <= d; ++i) {
                y = _ctx->multiply(y, gens[choice[i] - 1].element);
              }
              if (auto len = lookup(y)) {
                best = std::min(best, j + *len);
              }
            }
            continue;
          }
          sigs.push_back(std::move(sig));
          choice.push_back(0);
          continue;
        }
        TupleElement y = _ctx->multiply(stack[d], gens[s].element);
        if (d + 1 == j) {
          if (auto len = lookup(y)) {
            best = std::min(best, j + *len);
          }
          continue;
        }
        stack.push_back(std::move(y));
        sigs.emplace_back();
        choice.push_back(0);
      }
      if (best <= _radius + j) {
        return best;
      }
    }
    return Inconclusive{"radius limit reached", visits};
  }

  DistortionTable distortion_table(GroupContext const&      ctx,
                                   GeneratingSet const&     ambient_gens,
                                   GeneratingSet const&     sub_gens,
                                   MembershipOracle const&  member,
                                   DistortionOptions const& options) {
    BallOptions sub_options;
    sub_options.oracle = member;
    SubgroupMetric metric(ctx, sub_gens, options.cached_radius, sub_options);
    Ball const     amb = ball(ctx, ambient_gens, options.max_n, options.ambient);

    DistortionTable table;
    for (std::size_t n = 0; n <= options.max_n; ++n) {
      table.push_back(DistortionRow{n, 0, std::nullopt, false});
    }
    for (std::uint32_t id = 0; id < amb.table.size(); ++id) {
      TupleElement const g = amb.table.element(id);
      if (!member(g)) {
        continue;
      }
      auto const res = metric.length(g, options.length_budget);
      for (std::size_t n = amb.length[id]; n <= options.max_n; ++n) {
        auto& row = table[n];
        if (auto const* len = std::get_if<std::size_t>(&res)) {
          if (!row.witness || *len > row.delta
              || (*len == row.delta && g < *row.witness)) {
            row.delta   = *len;
            row.witness = g;
          }
        } else {
          row.partial = true;
        }
      }
    }
    return table;
  }

  SlopeFit fit_loglog_slope(std::vector<std::pair<double, double>> const& rows) {
    if (rows.size() < 2) {
      throw Error(ErrorKind::DegenerateInput, "need at least two rows");
    }
    double sx = 0, sy = 0;
    for (auto const& [n, v] : rows) {
      if (!(n > 0) || !(v > 0)) {
        throw Error(ErrorKind::DegenerateInput, "entries must be positive");
      }
      sx += std::log(n);
      sy += std::log(v);
    }
    double const k  = static_cast<double>(rows.size());
    double const mx = sx / k, my = sy / k;
    double       sxx = 0, sxy = 0;
    for (auto const& [n, v] : rows) {
      sxx += (std::log(n) - mx) * (std::log(n) - mx);
      sxy += (std::log(n) - mx) * (std::log(v) - my);
    }
    if (sxx == 0) {
      throw Error(ErrorKind::DegenerateInput, "all rows share the same n");
    }
    double const slope = sxy / sxx;
    double       res   = 0;
    for (auto const& [n, v] : rows) {
      double e = std::log(v) - (my + slope * (std::log(n) - mx));
      res += e * e;
    }
    return {slope, res};
  }

  void write_growth_csv(std::ostream& out, GrowthTable const& table) {
    out << "radius,sphere,ball\n";
    for (auto const& r : table) {
      out << fmt::format("{},{},{}\n", r.radius, r.sphere, r.ball);
    }
  }

  void write_distortion_csv(
      std::ostream& out, DistortionTable const& table,
      std::function<std::string(TupleElement const&)> const& show) {
    out << "n,delta,witness\n";
    for (auto const& r : table) {
      // A partial row's maximum is only a lower bound.
      out << fmt::format("{},{}{},{}\n", r.n, r.partial ? ">=" : "", r.delta,
                         r.witness ? show(*r.witness) : "");
    }
  }

}  // namespace dehnlab
