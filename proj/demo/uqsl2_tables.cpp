// Builds the four-dimensional quantum Lie algebra of U_q(sl2) and prints its
// braiding and bracket tables together with the q -> 1 specialization.

#include <iostream>

#include "focc/presentations.hpp"
#include "focc/qlie.hpp"

using namespace focc;

int main()
{
    const FieldDesc fq{"q"};
    auto H = uq_sl2_trunc(6);
    HBar<QQp> HB{H};

    Vec<QQp> kbar(HB.dim(), QQp(0));
    kbar[HB.to_bar(H.label_index("K"))] = QQp(1);
    auto L = generate_yd_submodule(HB, Side::Left, {kbar});
    std::cout << "L<K-bar>: dim " << L.space.dim()
              << (L.cert.complete ? " (complete)" : " (truncation limited)") << "\n\n";

    // express the tables in the basis K-bar, E-bar, FK-bar, (EF - q^2 FE)-bar
    QQp q = QQp::param();
    Vec<QQp> e(H.n(), QQp(0)), f(H.n(), QQp(0));
    e[H.label_index("E")] = QQp(1);
    f[H.label_index("F")] = QQp(1);
    auto ef = *H.mul(e, f);
    auto fe = *H.mul(f, e);
    for (int t = 0; t < H.n(); ++t)
        ef[t] -= q * q * fe[t];
    Vec<QQp> ebar(HB.dim(), QQp(0));
    ebar[HB.to_bar(H.label_index("E"))] = QQp(1);
    Vec<QQp> fkbar(HB.dim(), QQp(0));
    fkbar[HB.to_bar(H.label_index("F K"))] = QQp(1);
    auto Q = change_qlie_basis(build_qlie(H, L.space),
                               {kbar, ebar, fkbar, HB.project(sparse_of(ef))},
                               {"u00", "u10", "u01", "u11"});

    const char* names[4] = {"u00", "u10", "u01", "u11"};
    std::cout << "braiding:\n";
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            std::cout << "  tau(" << names[i] << " (x) " << names[j] << ") =";
            bool first = true;
            for (int k = 0; k < 4; ++k)
                for (int l = 0; l < 4; ++l) {
                    const QQp& c = Q.tau.at(tidx(k, l, 4), tidx(i, j, 4));
                    if (c.is_zero())
                        continue;
                    std::cout << (first ? " " : " + ") << "(" << scalar_str(c, fq) << ") "
                              << names[k] << " (x) " << names[l];
                    first = false;
                }
            std::cout << (first ? " 0\n" : "\n");
        }
    std::cout << "\nbracket:\n";
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            std::cout << "  [" << names[i] << ", " << names[j] << "] =";
            bool first = true;
            for (int k = 0; k < 4; ++k) {
                const QQp& c = Q.bracket.at(k, tidx(i, j, 4));
                if (c.is_zero())
                    continue;
                std::cout << (first ? " " : " + ") << "(" << scalar_str(c, fq) << ") "
                          << names[k];
                first = false;
            }
            std::cout << (first ? " 0\n" : "\n");
        }

    auto rep = certify_identities(Q);
    std::cout << "\nbraid relation: " << (rep.braid ? "holds" : "FAILS")
              << ", anticommutativity: " << (rep.anticommutative ? "holds" : "FAILS")
              << ", Jacobi: "
              << (rep.jacobi1 && rep.jacobi2 && rep.jacobi3 ? "hold" : "FAIL") << "\n";

    auto lim = classical_limit(Q, Rational(1));
    std::cout << "\nq -> 1 brackets (u00 -> 0):\n";
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            bool first = true;
            for (int k = 0; k < 4; ++k) {
                const QQ& c = lim.bracket.at(k, tidx(i, j, 4));
                if (c.is_zero())
                    continue;
                if (first)
                    std::cout << "  [" << names[i] << ", " << names[j] << "] =";
                std::cout << (first ? " " : " + ") << "(" << c.str() << ") " << names[k];
                first = false;
            }
            if (!first)
                std::cout << "\n";
        }
    return 0;
}
