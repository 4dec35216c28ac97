#include "dehnlab/context.hpp"

#include <algorithm>
#include <atomic>
#include <random>

#include "dehnlab/error.hpp"

namespace dehnlab {

  std::string_view to_string(Strategy s) {
    switch (s) {
      case Strategy::FreeReduction: return "FreeReduction";
      case Strategy::AbelianExact: return "AbelianExact";
      case Strategy::DehnSmallCancellation: return "DehnSmallCancellation";
      case Strategy::DirectProduct: return "DirectProduct";
    }
    return "Unknown";
  }

  std::size_t TupleElement::total_length() const noexcept {
    std::size_t n = 0;
    for (auto const& w : coordinates) {
      n += w.size();
    }
    return n;
  }

  ////////////////////////////////////////////////////////////////////////
  // Dehn's algorithm
  ////////////////////////////////////////////////////////////////////////

  namespace {
    // Longest suffix of `out` that is more than half of some relator shift
    // and a prefix of it. Returns (shift, length) or (npos, 0).
    std::pair<std::size_t, std::size_t>
    long_suffix(Presentation const& p, std::vector<Letter> const& out,
                std::size_t max_len) {
      std::size_t const n = out.size();
      auto const&       shifts = p.shifts();
      for (std::size_t k = std::min(max_len, n); k >= 1; --k) {
        Letter const first = out[n - k];
        for (std::size_t idx : p.shifts_starting_with(first)) {
          auto const& rho = shifts[idx].letters;
          if (rho.size() < k || 2 * k <= rho.size()) {
            continue;
          }
          if (std::equal(out.end() - k, out.end(), rho.begin())) {
            return {idx, k};
          }
        }
      }
      return {static_cast<std::size_t>(-1), 0};
    }
  }  // namespace

  Word dehn_reduce(Presentation const& p, std::span<Letter const> w,
                   DehnObserver const* observer) {
    std::size_t const   max_len = p.max_relator_length();
    std::vector<Letter> out;
    out.reserve(w.size());
    std::vector<Letter> pending(w.rbegin(), w.rend());
    while (!pending.empty()) {
      Letter x = pending.back();
      pending.pop_back();
      if (!out.empty() && out.back().is_inverse_of(x)) {
        out.pop_back();
        continue;
      }
      out.push_back(x);
      if (max_len == 0) {
        continue;
      }
      auto [idx, k] = long_suffix(p, out, max_len);
      if (k == 0) {
        continue;
      }
      auto const& rho = p.shifts()[idx].letters;
      out.resize(out.size() - k);
      if (observer != nullptr) {
        (*observer)(std::span<Letter const>(out), idx, k);
      }
      // The complement t = (rho[k..])^-1 is fed back as input, first letter
      // on top.
      for (std::size_t j = k; j < rho.size(); ++j) {
        pending.push_back(rho[j].inverse());
      }
    }
    return Word(std::move(out));
  }

  ////////////////////////////////////////////////////////////////////////
  // WordProblem
  ////////////////////////////////////////////////////////////////////////

  namespace {
    using Mat = std::array<std::uint32_t, 4>;

    Mat mul(Mat const& x, Mat const& y, std::uint64_t p) {
      return {static_cast<std::uint32_t>((std::uint64_t(x[0]) * y[0]
                                          + std::uint64_t(x[1]) * y[2])
                                         % p),
              static_cast<std::uint32_t>((std::uint64_t(x[0]) * y[1]
                                          + std::uint64_t(x[1]) * y[3])
                                         % p),
              static_cast<std::uint32_t>((std::uint64_t(x[2]) * y[0]
                                          + std::uint64_t(x[3]) * y[2])
                                         % p),
              static_cast<std::uint32_t>((std::uint64_t(x[2]) * y[1]
                                          + std::uint64_t(x[3]) * y[3])
                                         % p)};
    }

    Mat inv(Mat const& x, std::uint32_t p) {
      return {x[3], (p - x[1]) % p, (p - x[2]) % p, x[0]};
    }

    constexpr Mat identity_mat{1, 0, 0, 1};

    std::vector<Mat> special_linear(std::uint32_t p) {
      std::vector<Mat> out;
      for (std::uint32_t a = 0; a < p; ++a) {
        for (std::uint32_t b = 0; b < p; ++b) {
          for (std::uint32_t c = 0; c < p; ++c) {
            for (std::uint32_t d = 0; d < p; ++d) {
              if ((std::uint64_t(a) * d + std::uint64_t(p - b) * c) % p == 1) {
                out.push_back({a, b, c, d});
              }
            }
          }
        }
      }
      return out;
    }

    std::uint64_t mix(std::uint64_t h, std::uint64_t x) {
      // splitmix64 step on the running hash.
      h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
      h ^= h >> 30;
      h *= 0xbf58476d1ce4e5b9ULL;
      h ^= h >> 27;
      h *= 0x94d049bb133111ebULL;
      h ^= h >> 31;
      return h;
    }
  }  // namespace

  WordProblem::WordProblem(Presentation p, Strategy s)
      : _presentation(std::move(p)), _strategy(s) {
    _functionals = abelian_invariant_functionals(_presentation);
    if (_strategy == Strategy::DehnSmallCancellation
        && !_presentation.is_free()) {
      find_quotients();
    }
  }

  void WordProblem::find_quotients() {
    // Homomorphisms to SL(2, p), found by random search over all but the
    // last generator and exhaustive search over the last. Each one found is
    // verified on every relator, so its image is a genuine invariant.
    std::size_t const n = _presentation.alphabet().size();
    if (n == 0) {
      return;
    }
    std::mt19937_64 rng(0x5eed);
    for (std::uint32_t p : {13u, 17u, 19u}) {
      auto const sl = special_linear(p);
      std::uniform_int_distribution<std::size_t> pick(0, sl.size() - 1);
      auto image_of = [&](Word const& w, std::vector<Mat> const& gens) {
        Mat m = identity_mat;
        for (Letter l : w) {
          m = mul(m, l.sign() > 0 ? gens[l.generator()]
                                  : inv(gens[l.generator()], p),
                  p);
        }
        return m;
      };
      for (int trial = 0; trial < 400; ++trial) {
        std::vector<Mat> gens(n);
        for (std::size_t g = 0; g + 1 < n; ++g) {
          gens[g] = sl[pick(rng)];
        }
        bool found = false;
        for (auto const& last : sl) {
          gens[n - 1] = last;
          bool ok     = std::all_of(
              _presentation.relators().begin(),
              _presentation.relators().end(),
              [&](Word const& r) { return image_of(r, gens) == identity_mat; });
          if (!ok) {
            continue;
          }
          bool nonabelian = false;
          for (std::size_t i = 0; i < n && !nonabelian; ++i) {
            for (std::size_t j = i + 1; j < n && !nonabelian; ++j) {
              nonabelian = mul(gens[i], gens[j], p) != mul(gens[j], gens[i], p);
            }
          }
          if (nonabelian) {
            found = true;
            break;
          }
        }
        if (found) {
          Sl2Quotient q{p, std::vector<Mat>(2 * n)};
          for (std::size_t g = 0; g < n; ++g) {
            q.images[Letter(g, 1).code()]  = gens[g];
            q.images[Letter(g, -1).code()] = inv(gens[g], p);
          }
          _quotients.push_back(std::move(q));
          break;
        }
      }
    }
  }

  Word WordProblem::reduce(std::span<Letter const> w) const {
    if (_strategy == Strategy::DehnSmallCancellation) {
      return dehn_reduce(_presentation, w);
    }
    return free_reduce(w);
  }

  std::vector<std::int64_t>
  WordProblem::invariants(std::span<Letter const> w) const {
    std::vector<std::int64_t> out(_functionals.size(), 0);
    for (Letter l : w) {
      for (std::size_t i = 0; i < _functionals.size(); ++i) {
        out[i] += l.sign() * _functionals[i][l.generator()];
      }
    }
    return out;
  }

  bool WordProblem::is_trivial(std::span<Letter const> w) const {
    switch (_strategy) {
      case Strategy::FreeReduction: return free_reduce(w).empty();
      case Strategy::AbelianExact: {
        auto const&               coords = _presentation.abelian_coordinates();
        std::vector<std::int64_t> v(_presentation.abelian_rank(), 0);
        for (Letter l : w) {
          for (std::size_t k = 0; k < v.size(); ++k) {
            v[k] += l.sign() * coords[l.generator()][k];
          }
        }
        return std::all_of(v.begin(), v.end(), [](auto x) { return x == 0; });
      }
      case Strategy::DehnSmallCancellation:
        return dehn_reduce(_presentation, w).empty();
      case Strategy::DirectProduct: break;
    }
    throw Error(ErrorKind::StrategyUnlicensed, "not a single-group strategy");
  }

  bool WordProblem::equal(std::span<Letter const> a,
                          std::span<Letter const> b) const {
    if (a.size() == b.size() && std::equal(a.begin(), a.end(), b.begin())) {
      return true;
    }
    if (_strategy == Strategy::FreeReduction) {
      return false;
    }
    std::vector<Letter> q(a.begin(), a.end());
    q.reserve(a.size() + b.size());
    for (auto it = b.rbegin(); it != b.rend(); ++it) {
      q.push_back(it->inverse());
    }
    return is_trivial(q);
  }

  WordProblem::Signature
  WordProblem::signature(std::span<Letter const> w) const {
    Signature s{invariants(w), {}};
    for (auto const& q : _quotients) {
      Mat m = identity_mat;
      for (Letter l : w) {
        m = mul(m, q.images[l.code()], q.p);
      }
      s.images.push_back(m);
    }
    return s;
  }

  void WordProblem::multiply_signature(Signature& acc,
                                       Signature const& right) const {
    for (std::size_t i = 0; i < acc.invariants.size(); ++i) {
      acc.invariants[i] += right.invariants[i];
    }
    for (std::size_t i = 0; i < _quotients.size(); ++i) {
      acc.images[i] = mul(acc.images[i], right.images[i], _quotients[i].p);
    }
  }

  std::uint64_t WordProblem::fingerprint(Signature const& s) const {
    std::uint64_t h = 0x6a09e667f3bcc908ULL;
    for (auto x : s.invariants) {
      h = mix(h, static_cast<std::uint64_t>(x));
    }
    for (auto const& m : s.images) {
      h = mix(h, (std::uint64_t(m[0]) << 48) ^ (std::uint64_t(m[1]) << 32)
                     ^ (std::uint64_t(m[2]) << 16) ^ m[3]);
    }
    return h;
  }

  std::uint64_t WordProblem::fingerprint(std::span<Letter const> reduced) const {
    if (_strategy == Strategy::FreeReduction) {
      return mix(0x6a09e667f3bcc908ULL, WordHash{}(reduced));
    }
    return fingerprint(signature(reduced));
  }

  namespace {
    std::uint64_t combine_keys(
        std::vector<std::shared_ptr<WordProblem const>> const& factors,
        auto const&                                            fingerprint_of) {
      std::uint64_t h = factors.size();
      for (std::size_t i = 0; i < factors.size(); ++i) {
        h = mix(h, fingerprint_of(i));
      }
      return h;
    }
  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // GroupContext
  ////////////////////////////////////////////////////////////////////////

  namespace {
    std::uint64_t next_context_id() {
      static std::atomic<std::uint64_t> counter{1};
      return counter++;
    }
  }  // namespace

  GroupContext::GroupContext() : _id(next_context_id()) {}

  GroupContext::GroupContext(GroupContext const& other)
      : _factors(other._factors),
        _product(other._product),
        _id(next_context_id()) {}

  GroupContext::GroupContext(GroupContext&&) noexcept = default;

  GroupContext& GroupContext::operator=(GroupContext const& other) {
    if (this != &other) {
      _factors = other._factors;
      _product = other._product;
      _id      = next_context_id();
      _table.reset();
    }
    return *this;
  }

  GroupContext& GroupContext::operator=(GroupContext&&) noexcept = default;
  GroupContext::~GroupContext()                                  = default;

  GroupContext GroupContext::free_group(Presentation p) {
    if (!p.is_free()) {
      throw Error(ErrorKind::StrategyUnlicensed,
                  "free reduction needs a presentation without relators");
    }
    GroupContext ctx;
    ctx._factors.push_back(
        std::make_shared<WordProblem>(std::move(p), Strategy::FreeReduction));
    return ctx;
  }

  GroupContext GroupContext::abelian(Presentation p) {
    if (!p.abelian_exact()) {
      throw Error(ErrorKind::StrategyUnlicensed,
                  "presentation is not marked free abelian");
    }
    GroupContext ctx;
    ctx._factors.push_back(
        std::make_shared<WordProblem>(std::move(p), Strategy::AbelianExact));
    return ctx;
  }

  GroupContext GroupContext::dehn(Presentation p) {
    Presentation q = certify_small_cancellation(p, Rational(1, 6));
    GroupContext ctx;
    ctx._factors.push_back(std::make_shared<WordProblem>(
        std::move(q), Strategy::DehnSmallCancellation));
    return ctx;
  }

  GroupContext GroupContext::automatic(Presentation p) {
    if (p.is_free()) {
      return free_group(std::move(p));
    }
    if (p.abelian_exact()) {
      return abelian(std::move(p));
    }
    return dehn(std::move(p));
  }

  GroupContext
  GroupContext::direct_product(std::vector<GroupContext> const& factors) {
    GroupContext ctx;
    ctx._product = true;
    for (auto const& f : factors) {
      if (f._product) {
        ctx._factors.insert(ctx._factors.end(), f._factors.begin(),
                            f._factors.end());
      } else {
        ctx._factors.push_back(f._factors.at(0));
      }
    }
    return ctx;
  }

  Strategy GroupContext::strategy() const noexcept {
    if (_product || _factors.empty()) {
      return Strategy::DirectProduct;
    }
    return _factors[0]->strategy();
  }

  Presentation const& GroupContext::presentation() const {
    if (_product || _factors.size() != 1) {
      throw Error(ErrorKind::InvalidArgument,
                  "direct product contexts have one presentation per factor");
    }
    return _factors[0]->presentation();
  }

  void GroupContext::check_factor_count(TupleElement const& g) const {
    if (g.size() != _factors.size()) {
      throw Error(ErrorKind::FactorCountMismatch,
                  "element has " + std::to_string(g.size())
                      + " coordinates, context has "
                      + std::to_string(_factors.size()));
    }
  }

  bool GroupContext::is_trivial(Word const& w) const {
    if (_factors.size() != 1) {
      throw Error(ErrorKind::FactorCountMismatch,
                  "a single word needs a one-factor context");
    }
    return _factors[0]->is_trivial(w.letters());
  }

  bool GroupContext::is_trivial(TupleElement const& g) const {
    check_factor_count(g);
    for (std::size_t i = 0; i < _factors.size(); ++i) {
      if (!_factors[i]->is_trivial(g[i].letters())) {
        return false;
      }
    }
    return true;
  }

  TupleElement GroupContext::identity() const {
    return TupleElement(std::vector<Word>(_factors.size()));
  }

  TupleElement GroupContext::element(Word const& w) const {
    if (_factors.size() != 1) {
      throw Error(ErrorKind::FactorCountMismatch,
                  "a single word needs a one-factor context");
    }
    return TupleElement{w};
  }

  TupleElement GroupContext::reduce(TupleElement const& g) const {
    check_factor_count(g);
    std::vector<Word> out;
    out.reserve(g.size());
    for (std::size_t i = 0; i < _factors.size(); ++i) {
      out.push_back(_factors[i]->reduce(g[i].letters()));
    }
    return TupleElement(std::move(out));
  }

  TupleElement GroupContext::multiply(TupleElement const& a,
                                      TupleElement const& b) const {
    check_factor_count(a);
    check_factor_count(b);
    std::vector<Word> out;
    out.reserve(a.size());
    for (std::size_t i = 0; i < _factors.size(); ++i) {
      out.push_back(_factors[i]->reduce((a[i] * b[i]).letters()));
    }
    return TupleElement(std::move(out));
  }

  TupleElement GroupContext::inverse(TupleElement const& g) const {
    check_factor_count(g);
    std::vector<Word> out;
    for (auto const& w : g.coordinates) {
      out.push_back(w.inverse());
    }
    return TupleElement(std::move(out));
  }

  bool GroupContext::equal(TupleElement const& a, TupleElement const& b) const {
    check_factor_count(a);
    check_factor_count(b);
    for (std::size_t i = 0; i < _factors.size(); ++i) {
      if (!_factors[i]->equal(_factors[i]->reduce(a[i].letters()).letters(),
                              _factors[i]->reduce(b[i].letters()).letters())) {
        return false;
      }
    }
    return true;
  }

  std::uint64_t GroupContext::bucket_key(TupleElement const& reduced) const {
    check_factor_count(reduced);
    return combine_keys(_factors, [&](std::size_t i) {
      return _factors[i]->fingerprint(reduced[i].letters());
    });
  }

  bool GroupContext::has_signatures() const noexcept {
    return std::all_of(_factors.begin(), _factors.end(),
                       [](auto const& f) { return f->has_signature(); });
  }

  GroupContext::Signature GroupContext::signature(TupleElement const& g) const {
    check_factor_count(g);
    Signature out;
    for (std::size_t i = 0; i < _factors.size(); ++i) {
      out.push_back(_factors[i]->signature(g[i].letters()));
    }
    return out;
  }

  void GroupContext::multiply_signature(Signature&       acc,
                                        Signature const& right) const {
    for (std::size_t i = 0; i < _factors.size(); ++i) {
      _factors[i]->multiply_signature(acc[i], right[i]);
    }
  }

  std::uint64_t GroupContext::bucket_key(Signature const& s) const {
    return combine_keys(_factors, [&](std::size_t i) {
      return _factors[i]->fingerprint(s[i]);
    });
  }

  InternTable& GroupContext::table() {
    if (!_table) {
      _table = std::make_unique<InternTable>(*this);
    }
    return *_table;
  }

  InternTable const& GroupContext::table() const {
    return const_cast<GroupContext*>(this)->table();
  }

  ElementRef GroupContext::intern(TupleElement const& g) {
    auto& t = table();
    return t.ref(t.insert(reduce(g)).id);
  }

  ElementRef GroupContext::intern(Word const& w) {
    return intern(element(w));
  }

  ////////////////////////////////////////////////////////////////////////
  // InternTable
  ////////////////////////////////////////////////////////////////////////

  InternTable::InternTable(GroupContext const& ctx)
      : _factors(ctx._factors), _context_id(ctx._id) {}

  bool InternTable::matches(std::uint32_t id, TupleElement const& g) const {
    for (std::size_t i = 0; i < _factors.size(); ++i) {
      if (!_factors[i]->equal(coordinate(id, i), g[i].letters())) {
        return false;
      }
    }
    return true;
  }

  std::optional<std::uint32_t> InternTable::find(TupleElement const& g,
                                                 std::uint64_t key) const {
    auto it = _buckets.find(key);
    if (it == _buckets.end()) {
      return std::nullopt;
    }
    for (std::uint32_t id = it->second.head;; id = _next[id]) {
      if (matches(id, g)) {
        return id;
      }
      if (id == it->second.tail) {
        break;
      }
    }
    return std::nullopt;
  }

  std::uint64_t InternTable::key(TupleElement const& g) const {
    if (g.size() != _factors.size()) {
      throw Error(ErrorKind::FactorCountMismatch, "wrong coordinate count");
    }
    return combine_keys(_factors, [&](std::size_t i) {
      return _factors[i]->fingerprint(g[i].letters());
    });
  }

  std::optional<std::uint32_t> InternTable::find(TupleElement const& g) const {
    return find(g, key(g));
  }

  InternTable::Result InternTable::insert(TupleElement const& g) {
    std::uint64_t const h = key(g);
    if (auto found = find(g, h)) {
      return {*found, false};
    }
    auto id = static_cast<std::uint32_t>(_keys.size());
    if (_offsets.empty()) {
      _offsets.push_back(0);
    }
    for (auto const& w : g.coordinates) {
      _arena.insert(_arena.end(), w.begin(), w.end());
      _offsets.push_back(_arena.size());
    }
    _keys.push_back(h);
    _next.push_back(id);
    auto [it, fresh] = _buckets.try_emplace(h, Chain{id, id, 0});
    if (!fresh) {
      _next[it->second.tail] = id;
      it->second.tail        = id;
    }
    _index_in_bucket.push_back(it->second.count++);
    return {id, true};
  }

  std::span<Letter const> InternTable::coordinate(std::uint32_t id,
                                                  std::size_t   i) const {
    std::size_t const slot  = std::size_t(id) * _factors.size() + i;
    std::uint64_t     begin = _offsets[slot];
    std::uint64_t     end   = _offsets[slot + 1];
    return std::span<Letter const>(_arena.data() + begin, end - begin);
  }

  TupleElement InternTable::element(std::uint32_t id) const {
    std::vector<Word> out;
    for (std::size_t i = 0; i < _factors.size(); ++i) {
      out.emplace_back(coordinate(id, i));
    }
    return TupleElement(std::move(out));
  }

  ElementRef InternTable::ref(std::uint32_t id) const {
    return ElementRef{_context_id, _keys.at(id), _index_in_bucket.at(id), id};
  }

  ////////////////////////////////////////////////////////////////////////
  // Coabelian maps
  ////////////////////////////////////////////////////////////////////////

  AbelianVector coabelian_value(CoabelianMap const& theta,
                                TupleElement const& g) {
    if (theta.components.size() != g.size()) {
      throw Error(ErrorKind::FactorCountMismatch,
                  "map has " + std::to_string(theta.components.size())
                      + " components, element has "
                      + std::to_string(g.size()));
    }
    if (theta.components.empty()) {
      return AbelianVector();
    }
    AbelianVector sum(theta.components[0].target().abelian_rank());
    for (std::size_t i = 0; i < g.size(); ++i) {
      sum += abelianize(g[i], theta.components[i]);
    }
    return sum;
  }

  bool kernel_membership(CoabelianMap const& theta, TupleElement const& g) {
    return coabelian_value(theta, g).is_zero();
  }

}  // namespace dehnlab
