#include "ears/fixtures.hpp"

namespace ears {

namespace {

std::vector<RationalVector> unit_basis(std::size_t n) {
    std::vector<RationalVector> out;
    for (std::size_t i = 0; i < n; ++i) {
        RationalVector e(n);
        e[i] = 1;
        out.push_back(e);
    }
    return out;
}

EarsDescriptor a1_even2() {
    auto s = SemilatticeData::make(2, unit_basis(2), {RationalVector{0, 0}, RationalVector{1, 0}, RationalVector{0, 1}});
    return construct_ears(TypeSymbol{Family::A, 1}, 2, s);
}

GoldenCheck matrix_check(const std::string& fixture, const std::string& name, const RationalMatrix& expected,
                         const RationalMatrix& actual) {
    GoldenCheck c{fixture, name, expected == actual, "", ""};
    if (!c.pass) {
        c.expected = expected.str();
        c.actual = actual.str();
    }
    return c;
}

} // namespace

Nullity2Example nullity2_example() {
    Nullity2Example x;
    x.ears = a1_even2();
    x.gram = RationalMatrix::from_rows(std::vector<std::vector<long>>{
        {0, 0, 0, 1, 0}, {0, 0, 0, 0, 1}, {0, 0, 1, 0, 0}, {1, 0, 0, 0, 0}, {0, 1, 0, 0, 0}});
    x.alpha = {RationalVector{0, 0, 1, 0, 0}, RationalVector{1, 0, 1, 0, 0}, RationalVector{0, 1, 1, 0, 0}};
    x.reflections = {
        RationalMatrix::from_rows(std::vector<std::vector<long>>{
            {1, 0, 0, 0, 0}, {0, 1, 0, 0, 0}, {0, 0, -1, 0, 0}, {0, 0, 0, 1, 0}, {0, 0, 0, 0, 1}}),
        RationalMatrix::from_rows(std::vector<std::vector<long>>{
            {1, 0, -2, -2, 0}, {0, 1, 0, 0, 0}, {0, 0, -1, -2, 0}, {0, 0, 0, 1, 0}, {0, 0, 0, 0, 1}}),
        RationalMatrix::from_rows(std::vector<std::vector<long>>{
            {1, 0, 0, 0, 0}, {0, 1, -2, 0, -2}, {0, 0, -1, 0, -2}, {0, 0, 0, 1, 0}, {0, 0, 0, 0, 1}}),
    };
    for (int i : {0, 1, 2, 0, 1, 2, 1, 0, 2, 1, 0, 2}) x.relation.letters.push_back(x.alpha[static_cast<std::size_t>(i)]);
    return x;
}

KernelExample kernel_example() {
    KernelExample x;
    x.ears = a1_even2();
    x.alpha = {RationalVector{0, 0, 1, 0, 0}, RationalVector{2, 0, 1, 0, 0}, RationalVector{2, 1, 1, 0, 0},
               RationalVector{0, 1, 1, 0, 0}};
    x.word.letters = x.alpha;
    return x;
}

Nullity3Example nullity3_example() {
    Nullity3Example x;
    x.ears = construct_ears(TypeSymbol{Family::A, 1}, 3, SemilatticeData::from_lattice(Lattice::standard(3)));
    x.gamma = RationalVector{1, 1, 1, 1, 0, 0, 0};
    // columns of the displayed 7x7 matrix
    const long cols[7][3] = {{0, -1, -1}, {1, 0, -1}, {0, 0, 1}, {-1, 1, 0}, {0, -1, 0}, {-1, 0, 0}, {0, 0, 0}};
    for (const auto& c : cols) x.alpha.push_back(RationalVector{c[0], c[1], c[2], 1, 0, 0, 0});
    x.certificate.letters = x.alpha;
    return x;
}

std::vector<GoldenCheck> golden_checks() { return golden_checks(nullity2_example(), kernel_example(), nullity3_example()); }

std::vector<GoldenCheck> golden_checks(const Nullity2Example& n2, const KernelExample& k, const Nullity3Example& n3) {
    std::vector<GoldenCheck> out;
    {
        const auto& x = n2;
        const auto& sp = x.ears.space();
        out.push_back(matrix_check("nullity2_example", "ambient form", x.gram, sp.form().gram()));
        for (std::size_t i = 0; i < 3; ++i)
            out.push_back(matrix_check("nullity2_example", "reflection r_" + std::to_string(i + 1), x.reflections[i],
                                       reflection_matrix(sp, x.alpha[i])));
        out.push_back(matrix_check("nullity2_example", "12-letter relation is the identity",
                                   RationalMatrix::identity(sp.dim()), evaluate(x.relation, sp).matrix));
    }
    {
        const auto& x = k;
        const auto& sp = x.ears.space();
        RationalMatrix m = evaluate(x.word, sp).matrix;
        GoldenCheck nontrivial{"kernel_example", "product is not the identity on V", !m.is_identity(), "", ""};
        if (!nontrivial.pass) {
            nontrivial.expected = "a matrix different from the identity";
            nontrivial.actual = m.str();
        }
        out.push_back(nontrivial);
        RationalMatrix restricted(x.restrict_dim, x.restrict_dim);
        bool invariant = true;
        for (std::size_t j = 0; j < x.restrict_dim; ++j)
            for (std::size_t i = 0; i < sp.dim(); ++i) {
                if (i < x.restrict_dim) restricted(i, j) = m(i, j);
                else if (m(i, j) != 0) invariant = false;
            }
        GoldenCheck inv{"kernel_example", "span(e1, e2, e3) is invariant", invariant, "", ""};
        if (!invariant) {
            inv.expected = "zero rows 4..5 in columns 1..3";
            inv.actual = m.str();
        }
        out.push_back(inv);
        out.push_back(matrix_check("kernel_example", "product restricts to the identity on span(e1, e2, e3)",
                                   RationalMatrix::identity(x.restrict_dim), restricted));
    }
    {
        const auto& x = n3;
        const auto& sp = x.ears.space();
        out.push_back(matrix_check("nullity3_example", "r_gamma equals the ordered 7-reflection product",
                                   reflection_matrix(sp, x.gamma), evaluate(x.certificate, sp).matrix));
    }
    return out;
}

} // namespace ears
