#pragma once

#include <memory>
#include <optional>

#include "extmds/linear_code.hpp"
#include "extmds/poly.hpp"

namespace extmds {

// Cyclic code of length n with monic generator g | x^n - 1; rows of the
// generator matrix are the cyclic shifts of g.
class CyclicCode {
  public:
    CyclicCode(std::shared_ptr<const Tower> tower, std::uint32_t n, Poly g);

    const LinearCode& code() const { return code_; }
    const Poly& generator_poly() const { return gen_; }
    const Poly& check_poly() const { return check_; }
    std::uint32_t length() const { return code_.length(); }
    std::uint32_t dimension() const { return code_.dimension(); }
    const std::shared_ptr<const Tower>& tower() const { return tower_; }

    // the dual, which is again cyclic: generator is the monic reciprocal of
    // the check polynomial; asserted equal to code().dual()
    CyclicCode dual_cyclic() const;

  private:
    std::shared_ptr<const Tower> tower_;
    LinearCode code_;
    Poly gen_, check_;
};

CyclicCode cyclic_from_generator(std::shared_ptr<const Tower> tower, std::uint32_t n, Poly g);

// g_u = M_{beta^u} M_{beta^(u+1)} ... M_{beta^floor((q+1)/2)}
Poly generator_gu(const Tower& tower, std::uint32_t u);

// the [q+1, 2u-1, q-2u+3] cyclic code with generator g_u, 1 <= u <= floor((q+1)/2)
CyclicCode code_Cu(std::shared_ptr<const Tower> tower, std::uint32_t u);

// narrow-sense BCH code of length q+1 and designed distance delta:
// generator lcm(M_beta, ..., M_{beta^(delta-1)})
CyclicCode bch_narrow(std::shared_ptr<const Tower> tower, std::uint32_t delta);

// the cyclic code with generator (x-1) g_u; equals dual(bch_narrow(q, u)),
// and the equality is asserted at construction
CyclicCode code_C_of_u(std::shared_ptr<const Tower> tower, std::uint32_t u);

bool is_reversible(const LinearCode& c);

// BCH bound: one plus the longest circular run of consecutive j in [0, n)
// with g(beta^j) = 0, computed from the generator's actual roots
std::uint32_t bch_bound(const CyclicCode& c);

// exact distance without any enumeration when the BCH bound meets the
// Singleton bound
std::optional<std::uint32_t> cyclic_distance_if_pinned(const CyclicCode& c);

// Exact minimum weight and count of a cyclic code: enumeration when
// affordable, otherwise a support scan seeded with the BCH bound.
MinDistance cyclic_min_weight(const CyclicCode& c, std::uint64_t budget, unsigned workers = 1);

// the u = 2^(m-1)-1 BCH code generated from its trace representation
// c_(a,b,c) = (a + Tr(b beta^(u i) + c beta^((u+1) i)))_i; used as an
// independent witness that must agree with bch_narrow
LinearCode bch_halfm_trace_form(const Tower& tower);

struct FamilyInstance {
    std::shared_ptr<const Tower> tower;
    std::uint32_t q = 0, u = 0;
    CyclicCode cu;                    // C_u
    LinearCode cu_dual;               // (C_u)^perp
    LinearCode cu_ext;                // extend(C_u)
    LinearCode cu_ext_dual;           // dual(extend(C_u))
    std::optional<CyclicCode> bch;    // C_(q, q+1, u, 1), u >= 2
    std::optional<CyclicCode> c_of_u; // C(u), u >= 2
};

// Builds all six codes of an instance and verifies the structural diagram:
// C(u) inside C_u, (C_u)^perp inside the BCH code, duality pairings, and
// augment(C(u)) == C_u.
FamilyInstance build_family(std::uint32_t q, std::uint32_t u, bool verify_diagram = true);

}  // namespace extmds
