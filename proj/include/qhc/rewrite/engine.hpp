#pragma once

#include "qhc/rewrite/rewriter.hpp"

#include <map>
#include <memory>
#include <string>
#include <vector>

namespace qhc {

// A spec together with its rational rewriter. Built once, shared read-only.
class Algebra {
public:
    explicit Algebra(AlgebraSpec spec)
        : spec_(std::make_shared<const AlgebraSpec>(std::move(spec))),
          rw_(std::make_shared<const RatRewriter>(*spec_, identity_coeff)) {}

    const AlgebraSpec& spec() const { return *spec_; }
    const RatRewriter& rw() const { return *rw_; }
    const AlphaPtr& alphabet() const { return spec_->alphabet(); }
    const std::string& id() const { return spec_->id(); }

    NcPoly parse(std::string_view src) const { return spec_->parse(src); }
    NcPoly nf(const NcPoly& p) const { return rw_->normal_form(p); }
    NcPoly nf(std::string_view src) const { return nf(parse(src)); }
    NcPoly mul(const NcPoly& a, const NcPoly& b) const { return rw_->mul(a, b); }
    NcPoly one() const { return NcPoly::scalar(alphabet(), 1); }
    NcPoly gen(const std::string& name) const { return NcPoly::letter(alphabet(), name); }

private:
    std::shared_ptr<const AlgebraSpec> spec_;
    std::shared_ptr<const RatRewriter> rw_;
};

NcPoly normal_form(const Algebra& a, const NcPoly& p);

struct AmbiguityReport {
    Word monomial;
    NcPoly left_first, right_first;
    bool resolved = false;
    std::string left_rule, right_rule;
};

// One report per overlap or inclusion among rule left-hand sides. Generated
// localization rules are skipped unless `include_generated`.
std::vector<AmbiguityReport> check_ambiguities(const Algebra& a, bool include_generated = false);

// Applies the leftmost or rightmost redex of w first, then reduces fully.
NcPoly straighten_trace(const Algebra& a, const Word& w, Strategy first);

struct HilbertTable {
    Bideg max;
    std::map<std::pair<int, int>, long> dims;
    long at(int m, int n) const {
        auto it = dims.find({m, n});
        return it == dims.end() ? 0 : it->second;
    }
};

// Counts normal words of the nonnegative cone (PBW block generators only) by
// depth-first search over irreducible words.
HilbertTable hilbert_table(const Algebra& a, Bideg max);
// Irreducible words of the cone, per bidegree.
std::map<std::pair<int, int>, std::vector<Word>> irreducible_words(const Algebra& a, Bideg max);
// Bidegrees where the PBW blocks disagree with the irreducible-word search.
std::vector<Bideg> pbw_mismatches(const Algebra& a, Bideg max);

struct SpecPoint {
    Rational q0, t0;
};
const std::vector<SpecPoint>& default_points();

struct RankResult {
    int rank = 0;
    int agreeing = 0;  // specializations attaining the maximum
    std::vector<int> per_point;
};

// Rank of the coefficient matrix of `elems` against their word support,
// evaluated mod p at each point; throws EvalError naming the point when a
// denominator vanishes.
RankResult rank_of_family(const std::vector<NcPoly>& elems, const std::vector<SpecPoint>& points = default_points());

Fp point_fp(const Rational& r);

}  // namespace qhc
