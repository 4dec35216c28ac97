#pragma once

// Word-problem strategies and element interning.
//
// A GroupContext pairs one presentation (or a list of factor presentations,
// for a direct product) with a strategy that decides equality. Elements of
// every context are TupleElements; a single group is a product with one
// factor.

#include <array>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include <absl/container/flat_hash_map.h>

#include "dehnlab/homomorphism.hpp"
#include "dehnlab/presentation.hpp"
#include "dehnlab/word.hpp"

namespace dehnlab {

  enum class Strategy {
    FreeReduction,
    AbelianExact,
    DehnSmallCancellation,
    DirectProduct
  };

  std::string_view to_string(Strategy s);

  struct TupleElement {
    std::vector<Word> coordinates;

    TupleElement() = default;
    explicit TupleElement(std::vector<Word> c) : coordinates(std::move(c)) {}
    TupleElement(std::initializer_list<Word> c) : coordinates(c) {}

    std::size_t size() const noexcept {
      return coordinates.size();
    }
    Word const& operator[](std::size_t i) const {
      return coordinates.at(i);
    }
    std::size_t total_length() const noexcept;

    friend bool operator==(TupleElement const&, TupleElement const&) = default;
    friend auto operator<=>(TupleElement const& a, TupleElement const& b) {
      return a.coordinates <=> b.coordinates;
    }
  };

  // Called for each replacement made by dehn_reduce: `prefix` is the reduced
  // word to the left of the replaced subword and `shift` indexes
  // Presentation::shifts().
  using DehnObserver
      = std::function<void(std::span<Letter const> prefix, std::size_t shift,
                           std::size_t matched)>;

  // Dehn's algorithm for one presentation. Every subword that is a prefix of
  // a relator shift and longer than half of it is replaced by the shorter
  // complement, with free reduction in between, until none remains.
  Word dehn_reduce(Presentation const& p, std::span<Letter const> w,
                   DehnObserver const* observer = nullptr);

  // The decision procedure for one factor group.
  class WordProblem {
   public:
    WordProblem(Presentation p, Strategy s);

    Strategy strategy() const noexcept {
      return _strategy;
    }
    Presentation const& presentation() const noexcept {
      return _presentation;
    }

    // A shorter representative: free reduction, or Dehn reduction.
    Word reduce(std::span<Letter const> w) const;
    bool is_trivial(std::span<Letter const> w) const;
    // Equality of two words each already passed through reduce().
    bool equal(std::span<Letter const> a, std::span<Letter const> b) const;
    // Values of the integer homomorphisms G -> Z on w.
    std::vector<std::int64_t> invariants(std::span<Letter const> w) const;
    // Hash of element invariants; equal elements have equal fingerprints.
    std::uint64_t fingerprint(std::span<Letter const> reduced) const;

    // For groups with relators the fingerprint is a hash of a homomorphic
    // image (integer invariants and SL(2,p) matrices), so it can be carried
    // along a product without building words.
    struct Signature {
      std::vector<std::int64_t>                 invariants;
      std::vector<std::array<std::uint32_t, 4>> images;  // one per quotient
    };
    bool has_signature() const noexcept {
      return _strategy != Strategy::FreeReduction;
    }
    Signature     signature(std::span<Letter const> w) const;
    void          multiply_signature(Signature& acc, Signature const& right) const;
    std::uint64_t fingerprint(Signature const& s) const;

    // Number of finite-quotient images mixed into fingerprints (Dehn only).
    std::size_t quotient_count() const noexcept {
      return _quotients.size();
    }

   private:
    struct Sl2Quotient {
      std::uint32_t                                 p;
      std::vector<std::array<std::uint32_t, 4>>     images;  // per letter code
    };

    void find_quotients();

    Presentation                           _presentation;
    Strategy                               _strategy;
    std::vector<std::vector<std::int64_t>> _functionals;
    std::vector<Sl2Quotient>               _quotients;
  };

  class InternTable;

  // Identifies an interned element: equal refs iff equal elements (within
  // one table).
  struct ElementRef {
    std::uint64_t context_id      = 0;
    std::uint64_t bucket          = 0;
    std::uint32_t index_in_bucket = 0;
    std::uint32_t id              = 0;

    friend bool operator==(ElementRef const& a, ElementRef const& b) {
      return a.context_id == b.context_id && a.id == b.id;
    }
  };

  class GroupContext {
   public:
    GroupContext();
    GroupContext(GroupContext const& other);
    GroupContext(GroupContext&&) noexcept;
    GroupContext& operator=(GroupContext const& other);
    GroupContext& operator=(GroupContext&&) noexcept;
    ~GroupContext();

    // Each factory throws StrategyUnlicensed if its precondition fails.
    static GroupContext free_group(Presentation p);
    static GroupContext abelian(Presentation p);
    static GroupContext dehn(Presentation p);
    // Picks the first licensed strategy among free, abelian, Dehn.
    static GroupContext automatic(Presentation p);
    static GroupContext direct_product(std::vector<GroupContext> const& factors);

    Strategy strategy() const noexcept;
    std::size_t factor_count() const noexcept {
      return _factors.size();
    }
    WordProblem const& factor(std::size_t i) const {
      return *_factors.at(i);
    }
    // The presentation of a single-factor context.
    Presentation const& presentation() const;
    std::uint64_t id() const noexcept {
      return _id;
    }

    bool is_trivial(Word const& w) const;
    bool is_trivial(TupleElement const& g) const;

    TupleElement identity() const;
    TupleElement reduce(TupleElement const& g) const;
    TupleElement multiply(TupleElement const& a, TupleElement const& b) const;
    TupleElement inverse(TupleElement const& g) const;
    bool         equal(TupleElement const& a, TupleElement const& b) const;
    // Wraps a word as a one-coordinate element.
    TupleElement element(Word const& w) const;

    std::uint64_t bucket_key(TupleElement const& reduced) const;

    using Signature = std::vector<WordProblem::Signature>;
    // True when no factor is free, so bucket keys follow products.
    bool          has_signatures() const noexcept;
    Signature     signature(TupleElement const& g) const;
    void          multiply_signature(Signature& acc, Signature const& right) const;
    std::uint64_t bucket_key(Signature const& s) const;

    // Interning into this context's own table.
    ElementRef          intern(TupleElement const& g);
    ElementRef          intern(Word const& w);
    InternTable&        table();
    InternTable const&  table() const;

   private:
    friend class InternTable;
    void check_factor_count(TupleElement const& g) const;

    std::vector<std::shared_ptr<WordProblem const>> _factors;
    bool                                            _product = false;
    std::uint64_t                                   _id;
    std::unique_ptr<InternTable>                    _table;
  };

  // Elements stored once each; representatives are reduced words packed in
  // one arena. Buckets are keyed by GroupContext::bucket_key and scanned in
  // insertion order with the context's equality test.
  class InternTable {
   public:
    explicit InternTable(GroupContext const& ctx);

    struct Result {
      std::uint32_t id;
      bool          inserted;
    };

    // g must already be reduced by the context.
    Result                       insert(TupleElement const& g);
    std::optional<std::uint32_t> find(TupleElement const& g) const;
    bool has_bucket(std::uint64_t key) const {
      return _buckets.contains(key);
    }

    std::size_t size() const noexcept {
      return _keys.size();
    }
    TupleElement            element(std::uint32_t id) const;
    std::span<Letter const> coordinate(std::uint32_t id, std::size_t i) const;
    ElementRef              ref(std::uint32_t id) const;

   private:
    std::uint64_t                key(TupleElement const& g) const;
    std::optional<std::uint32_t> find(TupleElement const& g,
                                      std::uint64_t       key) const;
    bool matches(std::uint32_t id, TupleElement const& g) const;

    std::vector<std::shared_ptr<WordProblem const>> _factors;
    std::uint64_t                                   _context_id;
    std::vector<Letter>                             _arena;
    std::vector<std::uint64_t>                      _offsets;  // per coordinate
    std::vector<std::uint64_t>                      _keys;
    std::vector<std::uint32_t>                      _next;
    std::vector<std::uint32_t>                      _index_in_bucket;
    struct Chain {
      std::uint32_t head;
      std::uint32_t tail;
      std::uint32_t count;
    };
    absl::flat_hash_map<std::uint64_t, Chain> _buckets;
  };

  // theta = sum of per-factor homomorphisms into one free abelian group.
  struct CoabelianMap {
    std::vector<GroupHom> components;
  };

  // Throws FactorCountMismatch when g has the wrong number of coordinates.
  AbelianVector coabelian_value(CoabelianMap const& theta, TupleElement const& g);
  bool kernel_membership(CoabelianMap const& theta, TupleElement const& g);

}  // namespace dehnlab
