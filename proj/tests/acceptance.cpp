// Acceptance suite: one line per criterion, exact arithmetic throughout.
// Exit status is the number of failed criteria.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <random>

#include "curvedop/cdga.hpp"
#include "curvedop/cooperad_checks.hpp"
#include "curvedop/json_io.hpp"
#include "curvedop/relations.hpp"
#include "support/fixtures.hpp"

using namespace curvedop;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

void line(int criterion, const char* name, bool pass, const std::string& extra = "") {
    std::printf("criterion %2d  %-34s %s%s\n", criterion, name, pass ? "PASS" : "FAIL",
                extra.empty() ? "" : ("  (" + extra + ")").c_str());
    std::fflush(stdout);
    if (!pass)
        ++failures;
}

SparseTensor random_tensor(std::mt19937& rng, const GrDgModule& m, const GeneratorKey& key) {
    SparseTensor t;
    t.arity = key.slots();
    t.degree = key.degree() - 1;
    std::uniform_int_distribution<int> val(-2, 2);
    std::vector<int> tuple(t.arity, 0);
    std::function<void(int)> rec = [&](int i) {
        if (i == t.arity) {
            int din = 0, win = 0;
            for (int v : tuple) {
                din += m.element(v).degree;
                win += m.element(v).weight;
            }
            for (int o = 0; o < m.dim(); ++o) {
                if (m.element(o).degree != din + t.degree)
                    continue;
                if (m.element(o).weight < win + key.weight())
                    continue;
                if (int c = val(rng); c != 0)
                    t.add(tuple, o, Rational(c));
            }
            return;
        }
        for (int v = 0; v < m.dim(); ++v) {
            tuple[i] = v;
            rec(i + 1);
        }
    };
    rec(0);
    return t;
}

std::string run_cli(const std::string& args, int* exit_code) {
    const char* bin = std::getenv("CURVEDOP_BIN");
    if (!bin) {
        *exit_code = -1;
        return "";
    }
    std::string cmd = std::string(bin) + " " + args + " 2>/dev/null";
    std::string out;
    char buf[4096];
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) {
        *exit_code = -1;
        return "";
    }
    while (std::size_t n = fread(buf, 1, sizeof(buf), pipe))
        out.append(buf, n);
    int status = pclose(pipe);
    *exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return out;
}

}  // namespace

int main() {
    // 1. Cooperad axiom suite within the stated ranges, under sixty seconds.
    {
        auto t0 = Clock::now();
        bool pass = true;
        pass = pass && check_coassociativity(Family::SCLIE, 5, 3).pass;
        pass = pass && check_curved_cooperad_identity(Family::SCLIE, 5, 3).pass;
        pass = pass && check_coassociativity(Family::CUAS, 4, 3).pass;
        pass = pass && check_curved_cooperad_identity(Family::CUAS, 4, 3).pass;
        pass = pass && check_coassociativity(Family::CCX, 3, 3, 3).pass;
        pass = pass && check_curved_cooperad_identity(Family::CCX, 3, 3, 3).pass;
        double sec = std::chrono::duration<double>(Clock::now() - t0).count();
        line(1, "cooperad axiom suite", pass && sec < 60.0,
             "runtime " + std::to_string(sec).substr(0, 5) + "s");
    }

    // 2. Curvature table.
    {
        bool pass = true;
        for (const GeneratorKey& g : keys_up_to(Family::CUAS, 4)) {
            bool expect = g.n == 2 && g.extra.size() == 1;
            pass = pass && (!is_zero(g.curvature()) == expect);
            if (expect)
                pass = pass && g.curvature() == Rational(1);
        }
        for (const GeneratorKey& g : keys_up_to(Family::SCLIE, 6))
            pass = pass && is_zero(g.curvature());
        for (const GeneratorKey& g : keys_up_to(Family::CCX, 4, 4)) {
            bool expect = g.extra == std::vector<int>{2};
            pass = pass && (!is_zero(g.curvature()) == expect);
        }
        line(2, "curvature table reproduction", pass);
    }

    // 3. Sign-convention bridge.
    line(3, "convention transport (n <= 4)", convention_transport_check(4).pass);

    // 4. Maurer-Cartan / relation oracle agreement on fifty randomized
    //    strict and perturbed structures of dimension <= 3.
    {
        std::mt19937 rng(12345u);
        bool pass = true;
        for (int trial = 0; trial < 50 && pass; ++trial) {
            AlgebraStructure alg =
                (trial % 2 == 0) ? fixtures::ktheta() : fixtures::sclie3();
            if (trial % 4 >= 2) {
                auto keys = keys_up_to(alg.family, 3);
                std::uniform_int_distribution<int> pick(0,
                                                        static_cast<int>(keys.size()) - 1);
                for (int tries = 0; tries < 8; ++tries) {
                    GeneratorKey k = keys[pick(rng)];
                    if (k.is_coaugmentation())
                        continue;
                    SparseTensor pert = random_tensor(rng, alg.module, k);
                    if (pert.is_zero())
                        continue;
                    SparseTensor cur = alg.op(k);
                    cur.arity = pert.arity;
                    cur.degree = pert.degree;
                    cur.add_tensor(pert);
                    alg.set_op(k, cur);
                    break;
                }
            }
            auto mc = mc_check(alg, 4, 3);
            auto rel = check_structure_relations(alg, 4, 3);
            pass = pass && (mc.pass == rel.pass);
            if (!mc.pass && !rel.pass)
                pass = pass && (*mc.first_failure == *rel.first_failure);
        }
        line(4, "oracle agreement (50 structures)", pass);
    }

    // 5. Strict-example validation up to weight 4.
    {
        bool pass = mc_check(fixtures::ktheta(), 4, 4).pass &&
                    mc_check(fixtures::complex_line(), 4, 4, 4).pass &&
                    mc_check(fixtures::lie4(), 4, 4, 4).pass;
        int rc = -1;
        const char* bin = std::getenv("CURVEDOP_BIN");
        if (bin) {
            const char* fixdir = std::getenv("CURVEDOP_FIXTURES");
            std::string dir = fixdir ? fixdir : "fixtures";
            for (const char* f : {"ktheta.json", "complex_c.json", "lie4.json"}) {
                run_cli("check-algebra " + dir + "/" + f + " --max-arity 4 --max-weight 4",
                        &rc);
                pass = pass && rc == 0;
            }
        }
        line(5, "strict fixtures validate", pass);
    }

    // 6. Bar identity on interior words; perturbed fixtures must fail.
    {
        bool pass = check_bar_square(fixtures::ktheta(), {3, 4, 2}).pass &&
                    check_bar_square(fixtures::complex_line(), {3, 4, 2}).pass &&
                    check_bar_square(fixtures::lie4(), {3, 4, 2}).pass;
        pass = pass && !check_bar_square(fixtures::skew_line(), {3, 3, 2}).pass;
        AlgebraStructure broken = fixtures::broken_unit();
        pass = pass && !check_bar_square(broken, {3, 3, 2}).pass;
        line(6, "bar square identity", pass);
    }

    // 7. Symmetric-model agreement.
    {
        bool pass = sym_model_agreement(fixtures::complex_line(), {3, 4, 2}).pass &&
                    sym_model_agreement(fixtures::lie4(), {3, 3, 2}).pass;
        line(7, "symmetric model agreement", pass);
    }

    // 8. Twisted differential squares to zero; the trivial module validates.
    {
        AlgebraStructure cc = fixtures::complex_line();
        ModuleCoefficients triv = trivial_complex_module(cc);
        bool pass = check_module(cc, triv, 3, 3).pass;
        pass = pass && check_dtau_square(cc, triv, {3, 3, 2}).pass;
        AlgebraStructure kt = fixtures::ktheta();
        pass = pass && check_dtau_square(kt, regular_module(kt), {3, 3, 2}).pass;
        AlgebraStructure l4 = fixtures::lie4();
        pass = pass && check_dtau_square(l4, trivial_complex_module(l4), {2, 2, 1}).pass;
        line(8, "twisted differential squares to zero", pass);
    }

    // 9. Degree-zero correspondence with both containments and the dimension
    //    cross-check at lengths one through three.
    {
        AlgebraStructure cc = fixtures::complex_line();
        bool pass = true;
        std::vector<int> dims;
        for (int L = 1; L <= 3; ++L) {
            auto rep = z0_infinity_correspondence(cc, {3, L, 2});
            pass = pass && rep.pass && rep.kernel_in_mc && rep.mc_in_kernel;
            dims.push_back(rep.dim_kernel);
            ModuleCoefficients triv = trivial_complex_module(cc);
            pass = pass && aq_cohomology(cc, triv, 0, {3, L, 2}, false).dim == rep.dim_kernel;
        }
        pass = pass && dims == std::vector<int>{4, 6, 8};
        line(9, "degree-zero correspondence", pass,
             "dims " + std::to_string(dims[0]) + "," + std::to_string(dims[1]) + "," +
                 std::to_string(dims[2]));
    }

    // 10. Commutative algebra laws on the cochains of the complex line.
    {
        auto rep = check_cdga(fixtures::complex_line(), {3, 3, 1});
        line(10, "complex cdga laws", rep.pass, rep.pass ? "" : rep.failed_law);
    }

    // 11. Byte-identical reports for identical inputs.
    {
        bool pass = true;
        const char* bin = std::getenv("CURVEDOP_BIN");
        if (bin) {
            const char* fixdir = std::getenv("CURVEDOP_FIXTURES");
            std::string dir = fixdir ? fixdir : "fixtures";
            int rc1 = 0, rc2 = 0;
            for (std::string cmd :
                 {"check-algebra " + dir + "/complex_c.json --max-arity 3",
                  "bar " + dir + "/ktheta.json --max-length 2 --max-weight 2",
                  "z0 " + dir + "/complex_c.json --max-length 2 --max-k 1"}) {
                std::string a = run_cli(cmd, &rc1);
                std::string b = run_cli(cmd, &rc2);
                pass = pass && rc1 == rc2 && !a.empty() && a == b;
            }
        } else {
            pass = false;
        }
        line(11, "deterministic reports", pass);
    }

    if (failures)
        std::printf("%d criterion(s) failed\n", failures);
    else
        std::printf("all criteria passed\n");
    return failures;
}
