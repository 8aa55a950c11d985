#pragma once

// The character from the graded representation ring to the quotient of
// the Stiefel-Whitney subring by the canonical ideal, its kernel on
// the catalog groups, and the comparison with mod-2 Milnor K-theory
// over the finite catalog of W-groups.

#include "grw/gammagraded.hpp"
#include "grw/swquotient.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace grw::zeta {

// A cohomology model with total Stiefel-Whitney classes assigned to
// every real irreducible and a computable quotient by the canonical
// ideal.  Elements are coordinate vectors over a fixed degreewise
// quotient basis.
class CohModel {
public:
    virtual ~CohModel() = default;

    virtual int max_degree() const = 0;
    virtual int quotient_dim(int d) const = 0;

    // image of prod w_{k_i}(rho_i)^{m_i} in the degree-d quotient,
    // where d is the monomial's degree
    virtual std::vector<uint8_t> w_monomial(const gamma::ChernMono& m) const = 0;

    // short label for reports
    virtual std::string describe() const = 0;
};

// Model factory for the catalog: elementary abelian groups (polynomial
// model, quotient through the subset algebra), cyclic groups (trivial,
// polynomial, or x-y model by the 2-part of the order), dihedral of
// order 8.
std::unique_ptr<CohModel> model_for(const std::shared_ptr<const rep::RepRing>& ring,
                                    int max_degree);

// ---- the character ----

struct OmegaDegree {
    int degree = 0;
    int source_dim = 0;  // dim gr^n (x) F2
    int target_dim = 0;  // dim of the model quotient
    int image_rank = 0;
    int kernel_dim = 0;
    bool well_defined = true;
    f2::Matrix kernel;  // rows in gr_mod2 coordinates
    f2::Matrix map;     // source_dim x target_dim once well defined
};

struct OmegaReport {
    std::vector<OmegaDegree> degrees;  // 1..D
    bool well_defined = true;
    bool injective = true;   // over all computed degrees
    bool surjective = true;  // onto the quotient

    const OmegaDegree& at(int n) const { return degrees.at(n - 1); }
};

OmegaReport omega(gamma::GammaFiltration& gf, const CohModel& model, int max_degree);

// ker omega == ideal generated by the given Chern monomials,
// degreewise up to max_degree
bool kernel_generated_by(gamma::GammaFiltration& gf, const OmegaReport& rep,
                         const std::vector<gamma::ChernMono>& gens, int max_degree);

// ---- Milnor K comparison over the W-group catalog ----

enum class WGroupCase { FiniteField, RealClosed, Dihedral, CFieldRank1, CFieldRank2, CFieldRank3 };

struct CaseData {
    WGroupCase id;
    std::string name;        // CLI name
    std::string group_name;  // catalog group of the case
    std::vector<int> reference_dims;  // mod-2 Milnor K dims in degrees 1..
    std::string provenance;
};

const std::vector<CaseData>& zeta_catalog();
std::optional<CaseData> find_case(const std::string& name);

struct ZetaReport {
    CaseData data;
    std::vector<int> dec_dims;  // degrees 1..D
    bool dims_match = true;
    bool surjective_onto_dec = true;  // by construction of the span
    bool iso_degree1 = true, iso_degree2 = true;
};

ZetaReport zeta_case(const CaseData& c, int max_degree);

struct MatsumotoReport {
    bool dihedral_product_zero = false;   // c1(r1) c1(r2) = 0 in gr R(D4)
    bool cyclic_square_zero = false;      // c1(eps)^2 = 0 in gr R(Z4, R) (x) F2
    bool complex_double_zero = false;     // c1(rho^2) = 2 c1(rho), 0 mod 2, over C
    bool ok() const
    {
        return dihedral_product_zero && cyclic_square_zero && complex_double_zero;
    }
};

MatsumotoReport matsumoto_checks();

// omega . zeta agrees with the quotient projection of the tautological
// identification on all products of degree-1 generators up to D
struct SquareReport {
    std::string case_name;
    int checked = 0;
    bool commutes = true;
};

SquareReport square_diagram_check(const CaseData& c, int max_degree);

// theta_n(t^n) = t^{2^{n-1}} in the one-variable polynomial model
bool theta_on_galois_model(int n);

}  // namespace grw::zeta
