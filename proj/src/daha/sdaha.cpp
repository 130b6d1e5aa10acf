#include "qhc/daha/daha.hpp"

namespace qhc {

AlgebraSpec sdaha_spec() {
    auto al = std::make_shared<Alphabet>(
        "sdaha", std::vector<Alphabet::Entry>{{"Q1", {1, 0}, ""},
                                              {"Q2", {2, 0}, "Q2i"},
                                              {"Q2i", {-2, 0}, "Q2"},
                                              {"R", {1, 1}, ""},
                                              {"P1", {0, 1}, ""},
                                              {"P2", {0, 2}, "P2i"},
                                              {"P2i", {0, -2}, "P2"}});
    AlgebraSpec s("sdaha", al);
    std::vector<PbwBlock> pbw = {{al->at("Q1"), {}, -1},
                                 {al->at("Q2"), al->at("Q2i"), -1},
                                 {al->at("R"), {}, 1},
                                 {al->at("P1"), {}, -1},
                                 {al->at("P2"), al->at("P2i"), -1}};
    s.set_pbw(pbw);
    s.set_order({pair_component(*al, {"Q1", "Q2", "Q2i", "R"}, {"R", "P1", "P2", "P2i"}, "P-before-Q pairs"),
                 length_component(*al), inversion_component(*al, pbw), lex_component()});

    s.add_rule("P2*P1", "P1*P2", "P1P2");
    s.add_rule("Q2*Q1", "Q1*Q2", "Q1Q2");
    s.add_rule("P2*Q2", "q^-4*Q2*P2", "P2Q2");
    s.add_rule("P2*Q1", "q^-2*Q1*P2", "P2Q1");
    s.add_rule("P1*Q2", "q^-2*Q2*P1", "P1Q2");
    s.add_rule("P1*Q1", "Q1*P1 + (q^-2 - 1)*R", "P1Q1");
    s.add_rule("P2*R", "q^-2*R*P2", "P2R");
    s.add_rule("R*Q2", "q^-2*Q2*R", "RQ2");
    s.add_rule("P1*R", "q^-2*R*P1 + (1 - q^-2)*Q1*P2", "P1R");
    s.add_rule("R*Q1", "q^-2*Q1*R + (1 - q^-2)*Q2*P1", "RQ1");
    s.add_rule("R*R", "(1 + t^2)*(q^-2 + t^-2)*Q2*P2 - q^-2*Q2*P1^2 - q^-2*Q1^2*P2 + q^-2*Q1*R*P1", "R2reln");

    s.add_qcentral({Word(1, al->at("Q2")), {0, 2}, true});
    s.add_qcentral({Word(1, al->at("P2")), {-2, 0}, true});
    s.generate_localization_rules();
    return s;
}

const Algebra& sdaha() {
    static const Algebra a(sdaha_spec());
    return a;
}

}  // namespace qhc
