#pragma once

#include "qhc/ncpoly/ncpoly.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace qhc {

struct RewriteRule {
    Word lhs;
    NcPoly rhs;
    std::string tag;
    bool core = true;  // false for generated localization rules
};

// One component of a lexicographic termination order on words.
struct OrderComponent {
    enum class Kind { Additive, PairCount, Inversions, Lex };
    Kind kind = Kind::Lex;
    std::string name;
    std::vector<int> weight;  // Additive weight or Inversions rank, per letter
    std::vector<int> a, b;    // PairCount: class multiplicities, counts b-before-a pairs

    int64_t eval(const Word& w) const;
    int64_t count_a(const Word& w) const;
    int64_t count_b(const Word& w) const;
};

struct PbwBlock {
    Letter gen;
    std::optional<Letter> inv;
    int max_exp = -1;  // -1: unbounded
};

// An element g (a word, usually one letter) with g*h = q^<kappa, deg h> h*g.
struct QCentral {
    Word elem;
    Bideg kappa;
    bool invertible = false;
};

struct InvalidRule : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

class AlgebraSpec {
public:
    AlgebraSpec(std::string id, AlphaPtr alpha) : id_(std::move(id)), alpha_(std::move(alpha)) {}

    const std::string& id() const { return id_; }
    const AlphaPtr& alphabet() const { return alpha_; }
    const std::vector<RewriteRule>& rules() const { return rules_; }
    const std::vector<OrderComponent>& order() const { return order_; }
    const std::vector<PbwBlock>& pbw() const { return pbw_; }
    const std::vector<QCentral>& qcentral() const { return qcentral_; }

    NcPoly parse(std::string_view src) const;
    Word word(std::string_view src) const;  // a single monomial with coefficient 1

    // Adds a rule; validated against the termination order.
    void add_rule(const Word& lhs, const NcPoly& rhs, std::string tag, bool core = true);
    void add_rule(std::string_view lhs, std::string_view rhs, std::string tag) {
        add_rule(word(lhs), parse(rhs), std::move(tag));
    }
    void drop_rule(const std::string& tag);
    void replace_rule(const std::string& tag, const NcPoly& rhs);
    const RewriteRule* find_rule(const std::string& tag) const;

    void set_order(std::vector<OrderComponent> order) { order_ = std::move(order); }
    void set_pbw(std::vector<PbwBlock> pbw) { pbw_ = std::move(pbw); }
    void add_qcentral(QCentral qc) { qcentral_.push_back(std::move(qc)); }
    // Swap rules for single-letter invertible q-central generators and their
    // cancellations, for every out-of-order pair not covered by a core rule.
    void generate_localization_rules();

    // Throws InvalidRule describing the first violated invariant.
    void validate_rule(const RewriteRule& r) const;
    // -1, 0, 1 under the termination order.
    int compare(const Word& u, const Word& v) const;

    // Normal word predicate given by the PBW blocks.
    bool pbw_accepts(const Word& w) const;
    // Words of the nonnegative cone of bidegree d accepted by the blocks.
    std::vector<Word> pbw_enumerate(Bideg d) const;

    std::string str(const Word& w) const { return alpha_->str(w); }

private:
    std::string id_;
    AlphaPtr alpha_;
    std::vector<RewriteRule> rules_;
    std::vector<OrderComponent> order_;
    std::vector<PbwBlock> pbw_;
    std::vector<QCentral> qcentral_;
};

// Helpers for building order components.
OrderComponent length_component(const Alphabet& a);
OrderComponent additive_component(const Alphabet& a, const std::vector<std::pair<std::string, int>>& w,
                                  std::string name);
// `a_names`/`b_names` list letters with multiplicity (a letter may repeat).
OrderComponent pair_component(const Alphabet& al, const std::vector<std::string>& a_names,
                              const std::vector<std::string>& b_names, std::string name);
// Inversions relative to the PBW block order; inverse letters share the rank
// of their generator's block.
OrderComponent inversion_component(const Alphabet& a, const std::vector<PbwBlock>& blocks);
OrderComponent lex_component();

}  // namespace qhc
