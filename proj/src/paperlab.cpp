#include "dehnlab/paperlab.hpp"

#include <algorithm>

#include "dehnlab/error.hpp"
#include "dehnlab/parse.hpp"

namespace dehnlab {

  namespace {
    [[noreturn]] void fail(std::string const& what) {
      throw Error(ErrorKind::ConstructionError, what);
    }

    GroupHom verified(GroupHom const& h, GroupContext const& target,
                      std::string const& name) {
      try {
        return verify_homomorphism(h, target);
      } catch (Error const& e) {
        fail(name + ": " + e.what());
      }
    }

    LabeledElement labeled(std::string label, TupleElement g) {
      return LabeledElement{std::move(label), std::move(g)};
    }
  }  // namespace

  SurfaceData build_surface_data() {
    SurfaceData s;
    s.alphabet = Alphabet{"a1", "b1", "a2", "b2"};
    auto w     = [&](char const* text) { return parse_word(text, s.alphabet); };

    s.gamma2_ctx = GroupContext::dehn(
        make_presentation(s.alphabet, {w("[a1,b1][a2,b2]")}));
    s.gamma2 = s.gamma2_ctx.presentation();

    Alphabet const z{"a", "b"};
    s.z2 = make_trusted_free_abelian_presentation(
        z, {parse_word("[a,b]", z)}, {{1, 0}, {0, 1}});
    s.z2_ctx = GroupContext::abelian(s.z2);
    s.z2w    = make_trusted_free_abelian_presentation(
        s.alphabet,
        {w("[a1,b1]"), w("a1 a2^-1"), w("b1 b2^-1"), w("[a1,b1][a2,b2]")},
        {{1, 0}, {0, 1}, {1, 0}, {0, 1}});
    s.z2w_ctx = GroupContext::abelian(s.z2w);

    Alphabet const f{"a1", "b2"};
    s.free_a1b2 = make_presentation(f, {});
    s.free_ctx  = GroupContext::free_group(s.free_a1b2);

    s.phi = verified(GroupHom(s.gamma2, s.z2,
                              {parse_word("a", z), parse_word("b", z),
                               parse_word("a", z), parse_word("b", z)}),
                     s.z2_ctx, "phi");
    s.nu  = verified(GroupHom(s.gamma2, s.gamma2,
                              {w("a1 b1 a1^-1 b1^-1 a1^-1"), w("a1 b1^-1 a1^-1"),
                               w("a2 b2 a2^-1 b2^-1 a2^-1"), w("a2 b2^-1 a2^-1")}),
                     s.gamma2_ctx, "nu");

    for (std::size_t g = 0; g < 4; ++g) {
      Word x{Letter(g, 1)};
      if (!(abelianize(apply_homomorphism(s.nu, x), s.phi)
            == -abelianize(x, s.phi))) {
        fail("phi(nu(x)) != -phi(x) for x = " + to_string(x, s.alphabet));
      }
    }

    // nu o nu is conjugation by [a_i, b_i] on handle i; undoing that
    // conjugation after nu gives the candidate inverse.
    GroupHom kappa = verified(
        GroupHom(s.gamma2, s.gamma2,
                 {w("[a1,b1]^-1 a1 [a1,b1]"), w("[a1,b1]^-1 b1 [a1,b1]"),
                  w("[a2,b2]^-1 a2 [a2,b2]"), w("[a2,b2]^-1 b2 [a2,b2]")}),
        s.gamma2_ctx, "conjugation");
    s.nu_inverse = verified(compose(kappa, s.nu), s.gamma2_ctx, "nu inverse");
    s.nu_is_automorphism = true;
    for (std::size_t g = 0; g < 4; ++g) {
      Word x{Letter(g, 1)};
      Word there
          = apply_homomorphism(s.nu_inverse, apply_homomorphism(s.nu, x));
      Word back
          = apply_homomorphism(s.nu, apply_homomorphism(s.nu_inverse, x));
      if (!s.gamma2_ctx.is_trivial(there * x.inverse())
          || !s.gamma2_ctx.is_trivial(back * x.inverse())) {
        s.nu_is_automorphism = false;
      }
    }

    s.retraction = verified(
        GroupHom(s.gamma2, s.free_a1b2,
                 {parse_word("a1", f), Word{}, Word{}, parse_word("b2", f)}),
        s.free_ctx, "retraction");
    s.inclusion = verified(
        GroupHom(s.free_a1b2, s.gamma2, {w("a1"), w("b2")}), s.gamma2_ctx,
        "inclusion");
    for (std::size_t g = 0; g < 2; ++g) {
      Word x{Letter(g, 1)};
      if (apply_homomorphism(s.retraction, apply_homomorphism(s.inclusion, x))
          != x) {
        fail("retraction does not fix " + to_string(x, f));
      }
    }
    return s;
  }

  MembershipOracle KernelGroup::oracle() const {
    return [t = theta](TupleElement const& g) { return kernel_membership(t, g); };
  }

  namespace {
    // Y: (x, nu(x)) per generator, then the lifted Z^2 relators paired
    // with 1.
    std::vector<LabeledElement> kernel_y(SurfaceData const& s) {
      std::vector<LabeledElement> out;
      for (std::size_t g = 0; g < 4; ++g) {
        Word x{Letter(g, 1)};
        out.push_back(labeled("d" + s.alphabet.name(g),
                              TupleElement{x, apply_homomorphism(s.nu, x)}));
      }
      for (std::size_t i = 0; i < s.z2w.relators().size(); ++i) {
        out.push_back(labeled("q" + std::to_string(i + 1),
                              TupleElement{s.z2w.relators()[i], Word{}}));
      }
      return out;
    }

    TupleElement pad(TupleElement const& g, std::size_t factors) {
      std::vector<Word> c = g.coordinates;
      c.resize(factors);
      return TupleElement(std::move(c));
    }
  }  // namespace

  KernelGroup build_kernel_group(SurfaceData const& s, std::size_t r) {
    if (r != 2 && r != 3) {
      throw Error(ErrorKind::InvalidArgument, "kernel groups exist for r = 2, 3");
    }
    KernelGroup k;
    k.r   = r;
    k.ctx = GroupContext::direct_product(
        std::vector<GroupContext>(r, s.gamma2_ctx));
    k.theta.components.assign(r, s.phi);
    auto const y = kernel_y(s);
    if (r == 2) {
      k.gens.name     = "Y";
      k.gens.elements = y;
    } else {
      Word const a1 = parse_word("a1", s.alphabet);
      Word const b1 = parse_word("b1", s.alphabet);
      Word const a2 = parse_word("a2", s.alphabet);
      Word const b2 = parse_word("b2", s.alphabet);
      auto nu = [&](Word const& x) { return apply_homomorphism(s.nu, x); };
      k.gens.name = "A";
      for (auto const& e : y) {
        k.gens.elements.push_back(labeled(e.label, pad(e.element, 3)));
      }
      k.gens.elements.push_back(labeled("u1", TupleElement{Word{}, nu(a1), a1}));
      k.gens.elements.push_back(labeled("v1", TupleElement{Word{}, nu(b1), b1}));
      k.gens.elements.push_back(
          labeled("ga", TupleElement{a1, Word{}, a1.inverse()}));
      k.gens.elements.push_back(
          labeled("gb", TupleElement{b2, b2.inverse(), Word{}}));
      k.gens.elements.push_back(labeled("u2", TupleElement{Word{}, nu(a2), a2}));
      k.gens.elements.push_back(labeled("v2", TupleElement{Word{}, nu(b2), b2}));
    }
    for (auto const& e : k.gens.elements) {
      if (!k.contains(e.element)) {
        fail("generator " + e.label + " is not in the kernel");
      }
    }
    return k;
  }

  namespace {
    GeneratingSet subset(GeneratingSet const& all, std::string name,
                         std::vector<std::string> const& extra) {
      GeneratingSet out{std::move(name), {}};
      for (auto const& e : all.elements) {
        bool from_y = e.label[0] == 'd' || e.label[0] == 'q';
        if (from_y
            || std::find(extra.begin(), extra.end(), e.label) != extra.end()) {
          out.elements.push_back(e);
        }
      }
      return out;
    }

    // Whether a freely reduced word is a power of the cyclically reduced c.
    std::optional<std::int64_t> power_of(Word const& w, Word const& c) {
      if (w.size() % c.size() != 0) {
        return std::nullopt;
      }
      auto const k = static_cast<std::int64_t>(w.size() / c.size());
      if (w == power(c, k)) {
        return k;
      }
      if (w == power(c, -k)) {
        return -k;
      }
      return std::nullopt;
    }
  }  // namespace

  K3AmalgamData build_k3_amalgam_data(SurfaceData const& s,
                                      KernelGroup const& k2,
                                      KernelGroup const& k3) {
    K3AmalgamData d;
    Word const    c = parse_word("[a1,b1]", s.alphabet);
    d.z             = TupleElement{Word{}, Word{}, c};
    auto find       = [&](std::string const& label) {
      for (auto const& e : k3.gens.elements) {
        if (e.label == label) {
          return e.element;
        }
      }
      fail("missing generator " + label);
    };
    d.u1     = find("u1");
    d.u2     = find("u2");
    d.all    = k3.gens;
    d.a1_set = subset(k3.gens, "A1", {"u1", "v1", "ga", "gb"});
    d.a2_set = subset(k3.gens, "A2", {"u2", "v2"});
    d.y_plus.name = "Y+";
    for (auto const& e : k2.gens.elements) {
      d.y_plus.elements.push_back(labeled(e.label, pad(e.element, 3)));
    }
    d.y_plus.elements.push_back(labeled("z", d.z));

    // pi: a2 -> b1, b2 -> a1 kills the relator and sends [a1,b1] to the
    // free commutator, so g in <[a1,b1]> forces pi(g) = [a1,b1]^k.
    Alphabet const f{"a1", "b1"};
    GroupHom const pi(s.gamma2, make_presentation(f, {}),
                      {parse_word("a1", f), parse_word("b1", f),
                       parse_word("b1", f), parse_word("a1", f)});
    Word const     pc = parse_word("[a1,b1]", f);
    GroupContext   gamma2 = s.gamma2_ctx;
    CoabelianMap   theta2 = k2.theta;
    d.h_member            = [=](TupleElement const& g) {
      if (g.size() != 3
          || !kernel_membership(theta2, TupleElement{g[0], g[1]})) {
        return false;
      }
      auto k = power_of(apply_homomorphism(pi, g[2]), pc);
      return k && gamma2.is_trivial(g[2] * power(c, -*k));
    };
    for (auto const& e : d.y_plus.elements) {
      if (!d.h_member(e.element)) {
        fail("generator " + e.label + " is not in K_2 x <[a1,b1]>");
      }
    }
    return d;
  }

  TupleElement build_h_m(SurfaceData const& s, std::int64_t m,
                         std::size_t factors) {
    if (m < 1 || factors < 1) {
      throw Error(ErrorKind::InvalidArgument, "h_m needs m >= 1");
    }
    std::vector<Word> c(factors);
    c[0] = build_commutator_power(parse_word("a1", s.alphabet),
                                  parse_word("b2", s.alphabet), m);
    return TupleElement(std::move(c));
  }

  Word build_w_m(Alphabet const& labels, std::int64_t m) {
    return build_commutator_power(Word{labels.letter("ga")},
                                  Word{labels.letter("gb")}, m);
  }

  Word build_test_word(Alphabet const& labels, std::int64_t m) {
    Word u = Word{labels.letter("u1"), labels.letter("u2")};
    return commutator(build_w_m(labels, m), power(u, m));
  }

  Alphabet label_alphabet(GeneratingSet const& gens) {
    std::vector<std::string> names;
    for (auto const& e : gens.elements) {
      names.push_back(e.label);
    }
    return Alphabet(std::move(names));
  }

  TupleElement evaluate(GroupContext const& ctx, GeneratingSet const& gens,
                        Word const& w) {
    TupleElement g = ctx.identity();
    for (Letter l : w) {
      auto const& x = gens.elements.at(l.generator()).element;
      g = ctx.multiply(g, l.sign() > 0 ? x : ctx.inverse(x));
    }
    return g;
  }

  bool in_retraction_subgroup(SurfaceData const& s, Word const& g) {
    Word back = apply_homomorphism(s.inclusion,
                                   apply_homomorphism(s.retraction, g));
    return s.gamma2_ctx.is_trivial(back * g.inverse());
  }

  ////////////////////////////////////////////////////////////////////////
  // Registry
  ////////////////////////////////////////////////////////////////////////

  GeneratingSet standard_generators(Alphabet const& a, std::size_t factors) {
    GeneratingSet out{"X", {}};
    for (std::size_t c = 0; c < factors; ++c) {
      for (std::size_t g = 0; g < a.size(); ++g) {
        std::vector<Word> coords(factors);
        coords[c] = Word{Letter(g, 1)};
        std::string label = a.name(g);
        if (factors > 1) {
          label += "_" + std::to_string(c + 1);
        }
        out.elements.push_back(
            labeled(std::move(label), TupleElement(std::move(coords))));
      }
    }
    return out;
  }

  PaperRegistry::PaperRegistry()
      : _surface(std::make_unique<SurfaceData>(build_surface_data())) {
    auto const& s = *_surface;
    _k2           = std::make_unique<KernelGroup>(build_kernel_group(s, 2));
    _k3           = std::make_unique<KernelGroup>(build_kernel_group(s, 3));
    _amalgam
        = std::make_unique<K3AmalgamData>(build_k3_amalgam_data(s, *_k2, *_k3));

    auto add = [&](std::string name, std::string description, Alphabet a,
                   GroupContext ctx, GeneratingSet gens, MembershipOracle m) {
      _groups.emplace(name, RegistryEntry{name, std::move(description),
                                          std::move(a), std::move(ctx),
                                          std::move(gens), std::move(m)});
    };
    Alphabet const ab{"a", "b"};
    add("free2", "free group on a, b", ab,
        GroupContext::free_group(make_presentation(ab, {})),
        standard_generators(ab, 1), {});
    add("z2", "Z^2 = <a, b | [a,b]>", ab, s.z2_ctx, standard_generators(ab, 1), {});
    add("z2w", "Z^2 on a1 b1 a2 b2 with four relators", s.alphabet, s.z2w_ctx,
        standard_generators(s.alphabet, 1), {});
    add("surface2", "genus-2 surface group <a1,b1,a2,b2 | [a1,b1][a2,b2]>",
        s.alphabet, s.gamma2_ctx, standard_generators(s.alphabet, 1), {});
    add("surface2_pow3", "direct product of three genus-2 surface groups",
        s.alphabet, _k3->ctx, standard_generators(s.alphabet, 3), {});
    add("k2", "kernel of phi_1 + phi_2 on the square of the surface group",
        s.alphabet, _k2->ctx, _k2->gens, _k2->oracle());
    add("k2xz", "K_2 x <[a1,b1]> in the cube of the surface group",
        s.alphabet, _k3->ctx, _amalgam->y_plus, _amalgam->h_member);
    add("k3", "kernel of phi_1 + phi_2 + phi_3 on the cube of the surface group",
        s.alphabet, _k3->ctx, _k3->gens, _k3->oracle());
  }

  RegistryEntry const& PaperRegistry::group(std::string const& name) const {
    auto it = _groups.find(name);
    if (it == _groups.end()) {
      throw Error(ErrorKind::InvalidArgument, "unknown group '" + name + "'");
    }
    return it->second;
  }

  std::vector<std::string> PaperRegistry::group_names() const {
    std::vector<std::string> out;
    for (auto const& [name, entry] : _groups) {
      out.push_back(name);
    }
    return out;
  }

  TupleElement parse_tuple(std::string const& text, RegistryEntry const& entry) {
    std::vector<Word> coords;
    std::size_t       start = 0;
    while (true) {
      auto bar = text.find('|', start);
      coords.push_back(parse_word(
          std::string_view(text).substr(start, bar == std::string::npos
                                                   ? std::string::npos
                                                   : bar - start),
          entry.alphabet));
      if (bar == std::string::npos) {
        break;
      }
      start = bar + 1;
    }
    if (coords.size() != entry.ctx.factor_count()) {
      throw Error(ErrorKind::FactorCountMismatch,
                  entry.name + " elements have "
                      + std::to_string(entry.ctx.factor_count())
                      + " coordinates separated by '|'");
    }
    return TupleElement(std::move(coords));
  }

  std::string format_tuple(TupleElement const& g, Alphabet const& alphabet) {
    if (g.size() == 1) {
      return to_string(g[0], alphabet);
    }
    std::string out = "(";
    for (std::size_t i = 0; i < g.size(); ++i) {
      out += (i ? " | " : "") + to_string(g[i], alphabet);
    }
    return out + ")";
  }

}  // namespace dehnlab
