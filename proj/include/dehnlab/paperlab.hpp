#pragma once

// The genus-2 constructions: the surface group, its maps to Z^2 and to a
// free group, the automorphism nu, the coabelian kernels K_2 and K_3 of
// Gamma_2^r, their generating sets, the witness elements h_m and words w_m,
// and the verification suite built on them.

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "dehnlab/area.hpp"
#include "dehnlab/context.hpp"
#include "dehnlab/homomorphism.hpp"
#include "dehnlab/spaces.hpp"

namespace dehnlab {

  struct SurfaceData {
    Alphabet     alphabet;  // a1 b1 a2 b2
    Presentation gamma2;
    GroupContext gamma2_ctx;
    Presentation z2;  // <a,b | [a,b]>
    GroupContext z2_ctx;
    Presentation z2w;  // four-generator form of Z^2
    GroupContext z2w_ctx;
    Presentation free_a1b2;  // free group on a1, b2
    GroupContext free_ctx;

    GroupHom phi;         // Gamma_2 -> Z^2, a_i -> a, b_i -> b
    GroupHom nu;          // Gamma_2 -> Gamma_2
    GroupHom nu_inverse;  // candidate inverse, conjugation composed with nu
    bool     nu_is_automorphism = false;
    GroupHom retraction;  // Gamma_2 -> Free(a1, b2)
    GroupHom inclusion;   // Free(a1, b2) -> Gamma_2

    Word relator() const {
      return gamma2.relators().front();
    }
  };

  // Builds and verifies everything above; throws ConstructionError naming
  // the failed check.
  SurfaceData build_surface_data();

  // Gamma_2^r with theta_r = phi_1 + ... + phi_r.
  struct KernelGroup {
    std::size_t   r = 0;
    GroupContext  ctx;
    CoabelianMap  theta;
    GeneratingSet gens;

    bool contains(TupleElement const& g) const {
      return kernel_membership(theta, g);
    }
    MembershipOracle oracle() const;
  };

  // r = 2: Y = {(x, nu(x))} and the lifted relators of the four-generator
  // Z^2 presentation paired with 1. r = 3: A_1 and A_2 together. Throws
  // ConstructionError if a generator misses the kernel and InvalidArgument
  // unless r is 2 or 3.
  KernelGroup build_kernel_group(SurfaceData const& s, std::size_t r);

  struct K3AmalgamData {
    TupleElement  z;   // (1, 1, [a1, b1])
    TupleElement  u1;  // (1, nu(a1), a1)
    TupleElement  u2;  // (1, nu(a2), a2)
    GeneratingSet y_plus;  // Y in the first two coordinates, and z
    GeneratingSet a1_set;
    GeneratingSet a2_set;
    GeneratingSet all;  // A_1 and A_2, shared elements once

    // K_2 x <[a1, b1]> inside Gamma_2^3.
    std::function<bool(TupleElement const&)> h_member;
  };

  K3AmalgamData build_k3_amalgam_data(SurfaceData const& s,
                                      KernelGroup const& k2,
                                      KernelGroup const& k3);

  // ([a1^m, b2^m], 1, ..., 1) with `factors` coordinates.
  TupleElement build_h_m(SurfaceData const& s, std::int64_t m,
                         std::size_t factors);
  // [ga^m, gb^m] over the labels of K3AmalgamData::all.
  Word build_w_m(Alphabet const& labels, std::int64_t m);
  // [w_m, (u1 u2)^m] over the same labels.
  Word build_test_word(Alphabet const& labels, std::int64_t m);

  // Names of a generating set as an alphabet, so words over it parse.
  Alphabet label_alphabet(GeneratingSet const& gens);
  // Product of the named generators, reduced in ctx.
  TupleElement evaluate(GroupContext const& ctx, GeneratingSet const& gens,
                        Word const& w);

  // One generator per letter of a in each coordinate; with several factors
  // labels carry the coordinate, e.g. "a1_2".
  GeneratingSet standard_generators(Alphabet const& a, std::size_t factors);

  // Whether g lies in <a1, b2>, via the retraction.
  bool in_retraction_subgroup(SurfaceData const& s, Word const& g);

  // A group known to the command line.
  struct RegistryEntry {
    std::string      name;
    std::string      description;
    Alphabet         alphabet;  // of each coordinate
    GroupContext     ctx;
    GeneratingSet    gens;
    MembershipOracle member;  // empty: the whole group
  };

  class PaperRegistry {
   public:
    PaperRegistry();

    SurfaceData const& surface() const noexcept {
      return *_surface;
    }
    KernelGroup const& k2() const noexcept {
      return *_k2;
    }
    KernelGroup const& k3() const noexcept {
      return *_k3;
    }
    K3AmalgamData const& amalgam() const noexcept {
      return *_amalgam;
    }

    // free2, z2, z2w, surface2, surface2_pow3, k2, k2xz, k3. Throws
    // InvalidArgument for other names.
    RegistryEntry const&     group(std::string const& name) const;
    std::vector<std::string> group_names() const;

   private:
    std::unique_ptr<SurfaceData>         _surface;
    std::unique_ptr<KernelGroup>         _k2;
    std::unique_ptr<KernelGroup>         _k3;
    std::unique_ptr<K3AmalgamData>       _amalgam;
    std::map<std::string, RegistryEntry> _groups;
  };

  // Parses "w1 | w2 | ..." into one word per coordinate.
  TupleElement parse_tuple(std::string const& text, RegistryEntry const& entry);
  std::string  format_tuple(TupleElement const& g, Alphabet const& alphabet);

  ////////////////////////////////////////////////////////////////////////
  // Verification suite
  ////////////////////////////////////////////////////////////////////////

  struct SuiteProfile {
    std::uint64_t seed = 0;
    // Computing |h_2| over Y takes far longer than everything else.
    bool include_m2 = false;
    // Ambient radius for the generating-set completeness check.
    std::size_t completeness_radius = 3;
    // Only the listed criteria (1-based); all when empty.
    std::vector<int> only;
  };

  struct ReportRow {
    int         id;
    std::string description;
    std::string expected;
    std::string measured;
    std::string status;  // PASS, FAIL or INCONCLUSIVE
    double      seconds = 0;
    // Named measurements, for regression fixtures.
    std::map<std::string, std::int64_t> values;
  };

  struct SuiteReport {
    std::vector<ReportRow>             rows;
    std::map<std::string, std::string> attachments;  // file name -> CSV

    // No FAIL rows.
    bool passed() const;
    bool any_inconclusive() const;
  };

  ReportRow   run_criterion(PaperRegistry const& reg, int id,
                            SuiteProfile const& profile,
                            std::map<std::string, std::string>* attachments
                            = nullptr);
  SuiteReport verify_paper_suite(PaperRegistry const& reg,
                                 SuiteProfile const&  profile);

  inline constexpr int criterion_count = 12;

  void write_report_csv(std::ostream& out, SuiteReport const& report);

}  // namespace dehnlab
