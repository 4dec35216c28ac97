#include "dehnlab/presentation.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "dehnlab/error.hpp"

namespace dehnlab {

  std::vector<std::vector<std::int64_t>> const&
  Presentation::abelian_coordinates() const {
    if (!_abelian_coordinates) {
      throw Error(ErrorKind::StrategyUnlicensed,
                  "presentation is not marked free abelian");
    }
    return *_abelian_coordinates;
  }

  std::size_t Presentation::abelian_rank() const {
    auto const& c = abelian_coordinates();
    return c.empty() ? 0 : c.front().size();
  }

  std::size_t Presentation::max_relator_length() const noexcept {
    std::size_t m = 0;
    for (auto const& r : _relators) {
      m = std::max(m, r.size());
    }
    return m;
  }

  void Presentation::build_shifts() {
    _shifts.clear();
    _by_first_letter.assign(2 * _alphabet.size(), {});
    std::set<Word> seen;
    for (std::size_t i = 0; i < _relators.size(); ++i) {
      for (int sign : {1, -1}) {
        Word r = sign > 0 ? _relators[i] : _relators[i].inverse();
        for (std::size_t j = 0; j < r.size(); ++j) {
          Word rho = r.rotated(j);
          if (!seen.insert(rho).second) {
            continue;
          }
          _by_first_letter[rho.front().code()].push_back(_shifts.size());
          _shifts.push_back(RelatorShift{std::move(rho), i, sign, j});
        }
      }
    }
  }

  Presentation make_presentation(Alphabet alphabet,
                                 std::vector<Word> const& relators) {
    Presentation p;
    for (auto const& r : relators) {
      if (!alphabet.contains(r)) {
        throw Error(ErrorKind::AlphabetMismatch,
                    "relator uses a generator outside the alphabet");
      }
      auto c = cyclic_reduce(r);
      if (c.linear_core.empty()) {
        throw Error(ErrorKind::EmptyRelator, "relator reduces to the empty word");
      }
      p._relators.push_back(c.linear_core);
    }
    p._alphabet = std::move(alphabet);
    p.build_shifts();
    return p;
  }

  Presentation make_trusted_free_abelian_presentation(
      Alphabet alphabet, std::vector<Word> const& relators,
      std::vector<std::vector<std::int64_t>> coordinates) {
    if (coordinates.size() != alphabet.size()) {
      throw Error(ErrorKind::AlphabetMismatch,
                  "one coordinate vector per generator required");
    }
    Presentation p = make_presentation(std::move(alphabet), relators);
    p._abelian_coordinates = std::move(coordinates);
    return p;
  }

  SmallCancellationReport check_metric_small_cancellation(Presentation const& p,
                                                          Rational lambda) {
    // Pieces are taken between index-distinct shifts. Two shifts that are
    // equal as words (proper powers) share every proper prefix.
    std::vector<Word> all;
    for (auto const& r : p.relators()) {
      for (int sign : {1, -1}) {
        Word rr = sign > 0 ? r : r.inverse();
        for (std::size_t j = 0; j < rr.size(); ++j) {
          all.push_back(rr.rotated(j));
        }
      }
    }
    SmallCancellationReport report{true, 0};
    for (std::size_t i = 0; i < all.size(); ++i) {
      for (std::size_t j = i + 1; j < all.size(); ++j) {
        auto const& u = all[i];
        auto const& v = all[j];
        std::size_t piece;
        if (u == v) {
          piece = u.size() - 1;
        } else {
          auto n = std::min(u.size(), v.size());
          piece  = 0;
          while (piece < n && u[piece] == v[piece]) {
            ++piece;
          }
        }
        if (piece == 0) {
          continue;
        }
        report.max_piece_length = std::max(report.max_piece_length, piece);
        auto too_long = [&](std::size_t rel_len) {
          // piece < lambda * rel_len  <=>  piece * den < num * rel_len
          return static_cast<std::int64_t>(piece) * lambda.denominator()
                 >= lambda.numerator() * static_cast<std::int64_t>(rel_len);
        };
        if (too_long(u.size()) || too_long(v.size())) {
          report.satisfied = false;
        }
      }
    }
    return report;
  }

  Presentation certify_small_cancellation(Presentation const& p,
                                          Rational           lambda) {
    if (!check_metric_small_cancellation(p, lambda).satisfied) {
      throw Error(ErrorKind::StrategyUnlicensed,
                  "presentation fails the metric small cancellation condition");
    }
    Presentation q = p;
    q._lambda      = lambda;
    return q;
  }

  std::vector<std::vector<std::int64_t>>
  abelian_invariant_functionals(Presentation const& p) {
    std::size_t const n = p.alphabet().size();
    // Row-reduce the relator exponent matrix over Q.
    std::vector<std::vector<Rational>> rows;
    for (auto const& r : p.relators()) {
      auto                  sums = exponent_sums(r.letters(), n);
      std::vector<Rational> row(sums.begin(), sums.end());
      rows.push_back(std::move(row));
    }
    std::vector<std::size_t> pivot_col;
    std::size_t              rank = 0;
    for (std::size_t col = 0; col < n && rank < rows.size(); ++col) {
      std::size_t piv = rank;
      while (piv < rows.size() && rows[piv][col] == Rational(0)) {
        ++piv;
      }
      if (piv == rows.size()) {
        continue;
      }
      std::swap(rows[piv], rows[rank]);
      Rational lead = rows[rank][col];
      for (auto& x : rows[rank]) {
        x /= lead;
      }
      for (std::size_t i = 0; i < rows.size(); ++i) {
        if (i != rank && rows[i][col] != Rational(0)) {
          Rational f = rows[i][col];
          for (std::size_t k = 0; k < n; ++k) {
            rows[i][k] -= f * rows[rank][k];
          }
        }
      }
      pivot_col.push_back(col);
      ++rank;
    }
    std::vector<std::vector<std::int64_t>> basis;
    for (std::size_t free = 0; free < n; ++free) {
      if (std::find(pivot_col.begin(), pivot_col.end(), free)
          != pivot_col.end()) {
        continue;
      }
      std::vector<Rational> v(n, 0);
      v[free] = 1;
      for (std::size_t i = 0; i < rank; ++i) {
        v[pivot_col[i]] = -rows[i][free];
      }
      std::int64_t lcm = 1;
      for (auto const& x : v) {
        lcm = std::lcm(lcm, x.denominator());
      }
      std::vector<std::int64_t> iv;
      for (auto const& x : v) {
        iv.push_back(x.numerator() * (lcm / x.denominator()));
      }
      basis.push_back(std::move(iv));
    }
    return basis;
  }

}  // namespace dehnlab
