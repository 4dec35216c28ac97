#pragma once

// Cayley balls, word length with respect to a generating set, distortion
// tables and log-log slope fitting.

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "dehnlab/area.hpp"
#include "dehnlab/context.hpp"

namespace dehnlab {

  struct LabeledElement {
    std::string  label;
    TupleElement element;
  };

  // Inverses are adjoined when enumerating; trivial elements are ignored.
  struct GeneratingSet {
    std::string                 name;
    std::vector<LabeledElement> elements;
  };

  // A membership test for the subgroup a generating set is meant to lie in.
  using MembershipOracle = std::function<bool(TupleElement const&)>;

  struct GrowthRow {
    std::size_t radius;
    std::size_t sphere;
    std::size_t ball;

    friend bool operator==(GrowthRow const&, GrowthRow const&) = default;
  };

  using GrowthTable = std::vector<GrowthRow>;

  // A generator or its inverse, as used by the searches.
  struct DirectedGenerator {
    std::size_t  index;  // into GeneratingSet::elements
    int          sign;
    TupleElement element;
  };

  // Directed generators in order g0, g0^-1, g1, g1^-1, ... with trivial
  // elements and repeated elements (e.g. an involution's inverse) dropped.
  std::vector<DirectedGenerator> directed_generators(GroupContext const& ctx,
                                                     GeneratingSet const& gens);

  struct Ball {
    GrowthTable                growth;
    InternTable                table;
    std::vector<std::uint32_t> length;  // by intern id
    // BFS tree: the parent id and the directed generator that reached each
    // element (none for the identity).
    std::vector<std::uint32_t> parent;
    std::vector<std::uint32_t> via;
    std::vector<DirectedGenerator> generators;

    explicit Ball(GroupContext const& ctx) : table(ctx) {}

    // Labels of a geodesic from the identity, e.g. "da1^-1".
    std::vector<std::string> geodesic(std::uint32_t id,
                                      GeneratingSet const& gens) const;
  };

  struct BallOptions {
    std::size_t      max_states = 50'000'000;
    MembershipOracle oracle;  // checked on every generator if set
  };

  // Breadth-first closure under right multiplication. Throws
  // MembershipViolation if a generator fails the oracle and StateLimit when
  // max_states would be exceeded.
  Ball ball(GroupContext const& ctx, GeneratingSet const& gens,
            std::size_t radius, BallOptions const& options = {});

  struct LengthBudget {
    std::size_t max_states = 20'000'000;
    std::size_t max_radius = 64;
  };

  using LengthOutcome = std::variant<std::size_t, Inconclusive>;

  // Exact word length of g over gens by bidirectional breadth-first search.
  // Throws MembershipViolation if the oracle is set and rejects g or a
  // generator.
  LengthOutcome word_length(GroupContext const& ctx, GeneratingSet const& gens,
                            TupleElement const& g, LengthBudget const& budget = {},
                            MembershipOracle const& oracle = {});

  // Plain breadth-first search from the identity; for cross-checks.
  LengthOutcome unidirectional_length(GroupContext const&  ctx,
                                      GeneratingSet const& gens,
                                      TupleElement const&  g,
                                      LengthBudget const&  budget = {});

  // Word lengths of many elements: a ball around the identity is built once
  // and each query searches outward from its target until the two meet.
  class SubgroupMetric {
   public:
    SubgroupMetric(GroupContext const& ctx, GeneratingSet gens,
                   std::size_t cached_radius, BallOptions const& options = {});

    LengthOutcome length(TupleElement const& g,
                         LengthBudget const& budget = {}) const;

    Ball const& identity_ball() const noexcept {
      return _ball;
    }
    std::size_t cached_radius() const noexcept {
      return _radius;
    }

   private:
    GroupContext const* _ctx;
    GeneratingSet       _gens;
    std::size_t         _radius;
    MembershipOracle    _oracle;
    Ball                _ball;
  };

  struct DistortionRow {
    std::size_t                 n;
    std::size_t                 delta;
    std::optional<TupleElement> witness;
    bool                        partial = false;
  };

  using DistortionTable = std::vector<DistortionRow>;

  struct DistortionOptions {
    std::size_t  max_n          = 3;
    std::size_t  cached_radius  = 3;  // identity ball over the subgroup set
    LengthBudget length_budget;
    BallOptions  ambient;
  };

  // Delta(n) = max |g|_Y over subgroup members g with |g|_X <= n, n = 0..max_n.
  // Both generating sets live in ctx; `member` decides subgroup membership.
  // Rows whose maximum depends on an inconclusive length are marked partial.
  DistortionTable distortion_table(GroupContext const&      ctx,
                                   GeneratingSet const&     ambient_gens,
                                   GeneratingSet const&     sub_gens,
                                   MembershipOracle const&  member,
                                   DistortionOptions const& options = {});

  struct SlopeFit {
    double slope;
    double residual;  // sum of squared residuals in log space
  };

  // Least-squares slope of log(value) against log(n). Throws DegenerateInput
  // with fewer than two rows, nonpositive entries or a single distinct n.
  SlopeFit fit_loglog_slope(std::vector<std::pair<double, double>> const& rows);

  void write_growth_csv(std::ostream& out, GrowthTable const& table);
  void write_distortion_csv(std::ostream& out, DistortionTable const& table,
                            std::function<std::string(TupleElement const&)> const&
                                show);

}  // namespace dehnlab
