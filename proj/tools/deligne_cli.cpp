#include <CLI11.hpp>

#include <cctype>
#include <fstream>
#include <iostream>
#include <sstream>

#include "deligne/caps.hpp"
#include "deligne/fock.hpp"
#include "deligne/grothendieck.hpp"
#include "deligne/json_io.hpp"
#include "deligne/lr.hpp"
#include "deligne/verify.hpp"

using namespace deligne;

namespace {

enum ExitCode { kOk = 0, kFailed = 1, kSyntax = 2 };

struct Common {
    std::string format = "text";
    std::string t = "0";
    std::string out;
};

void add_common(CLI::App* cmd, Common& c, bool with_t = true) {
    cmd->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"text", "json"}));
    if (with_t) cmd->add_option("--t", c.t, "Parameter t: an integer or 'generic'");
    cmd->add_option("--out", c.out, "Also write the JSON result to this file");
}

// Writes the JSON form to --out if requested, then prints text or JSON.
void emit(const Common& c, const Json& j, const std::string& text) {
    if (!c.out.empty()) {
        std::ofstream f(c.out);
        if (!f) throw std::runtime_error("cannot open " + c.out);
        f << j.dump(2) << "\n";
    }
    if (c.format == "json")
        std::cout << j.dump(2) << "\n";
    else
        std::cout << text;
}

std::pair<int, int> parse_range(const std::string& text) {
    const auto dots = text.find("..");
    if (dots == std::string::npos) throw ParseError("expected a range a..b, got '" + text + "'", text);
    try {
        std::size_t used_a = 0, used_b = 0;
        const std::string a = text.substr(0, dots), b = text.substr(dots + 2);
        const int lo = std::stoi(a, &used_a);
        const int hi = std::stoi(b, &used_b);
        if (used_a != a.size() || used_b != b.size()) throw std::invalid_argument(text);
        return {lo, hi};
    } catch (const std::logic_error&) {
        throw ParseError("expected a range a..b, got '" + text + "'", text);
    }
}

int parse_int(const std::string& text) {
    std::size_t used = 0;
    int v = 0;
    try {
        v = std::stoi(text, &used);
    } catch (const std::logic_error&) {
        used = 0;
    }
    if (used == 0 || used != text.size()) throw ParseError("expected an integer, got '" + text + "'", text);
    return v;
}

// "3", "int:3" or "shifted:3".
FunctorIndex parse_index(const std::string& text) {
    const auto colon = text.find(':');
    if (colon == std::string::npos) return FunctorIndex::plain(parse_int(text));
    const std::string tag = text.substr(0, colon);
    const int c = parse_int(text.substr(colon + 1));
    if (tag == "int") return FunctorIndex::integer(c);
    if (tag == "shifted") return FunctorIndex::shifted(c);
    throw ParseError("unknown index tag '" + tag + "'", text);
}

// "[3,1,-2]" or "(3,1,-2)".
std::vector<int> parse_sequence(const std::string& text) {
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
    if (s.size() < 2 || !((s.front() == '[' && s.back() == ']') || (s.front() == '(' && s.back() == ')')))
        throw ParseError("expected a bracketed integer sequence, got '" + text + "'", text);
    std::vector<int> out;
    std::stringstream body(s.substr(1, s.size() - 2));
    std::string item;
    while (std::getline(body, item, ',')) out.push_back(parse_int(item));
    return out;
}

std::vector<std::pair<Gen, int>> parse_word(const std::string& text) {
    std::vector<std::pair<Gen, int>> ops;
    std::stringstream ss(text);
    std::string tok;
    while (ss >> tok) {
        if (tok.size() < 2 || (tok[0] != 'f' && tok[0] != 'e'))
            throw ParseError("expected an operator like f0 or e-1, got '" + tok + "'", tok);
        int a = 0;
        try {
            a = parse_int(tok.substr(1));
        } catch (const ParseError&) {
            throw ParseError("expected an operator like f0 or e-1, got '" + tok + "'", tok);
        }
        ops.emplace_back(tok[0] == 'f' ? Gen::F : Gen::E, a);
    }
    return ops;
}

std::string vector_text(const Json& j) {
    if (j.empty()) return "0\n";
    std::string s;
    for (const auto& [k, v] : j.items()) s += k + ": " + std::to_string(v.get<std::int64_t>()) + "\n";
    return s;
}

std::string matrix_text(const BipartitionMatrix& m) {
    std::string s;
    for (const auto& [r, row] : m.rows())
        for (const auto& [c, v] : row) s += r.to_string() + " " + c.to_string() + " " + std::to_string(v) + "\n";
    return s;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Weight diagrams, multiplicities and Fock-space actions for Deligne categories"};
    app.require_subcommand(1);

    // diagram
    Common dc;
    std::string d_bip, d_family = "dprime", d_range;
    auto* diagram = app.add_subcommand("diagram", "Render the weight diagram of a bipartition");
    add_common(diagram, dc);
    diagram->add_option("bipartition", d_bip)->required();
    diagram->add_option("--family", d_family)->check(CLI::IsMember({"d", "dprime"}));
    diagram->add_option("--range", d_range, "Positions to print, a..b");

    // caps
    Common cc;
    std::string c_bip;
    auto* caps = app.add_subcommand("caps", "Cap diagram of d'_mu");
    add_common(caps, cc);
    caps->add_option("bipartition", c_bip)->required();

    // mult
    Common mc;
    std::string m_lambda, m_mu;
    auto* mult = app.add_subcommand("mult", "D^lambda_mu(t)");
    add_common(mult, mc);
    mult->add_option("lambda", m_lambda)->required();
    mult->add_option("mu", m_mu)->required();

    // matrix
    Common xc;
    std::string x_kind = "D", x_index = "0";
    int x_size = 3;
    auto* matrix = app.add_subcommand("matrix", "Grothendieck-level matrices");
    add_common(matrix, xc);
    matrix->add_option("kind", x_kind)->check(CLI::IsMember({"D", "Dinv", "B", "b", "atilde", "etilde", "A"}));
    matrix->add_option("--max-size", x_size)->check(CLI::Range(0, 8));
    matrix->add_option("--a", x_index, "Functor index: n, int:n or shifted:n");

    // decompose
    Common kc;
    std::string k_bip;
    auto* decompose = app.add_subcommand("decompose", "Standard filtration multiplicities of T(lambda)");
    add_common(decompose, kc);
    decompose->add_option("bipartition", k_bip)->required();

    // homdim
    Common hc;
    std::string h_lambda, h_mu;
    auto* homdim = app.add_subcommand("homdim", "dim Hom(T(lambda), T(mu))");
    add_common(homdim, hc);
    homdim->add_option("lambda", h_lambda)->required();
    homdim->add_option("mu", h_mu)->required();

    // eigen
    Common ec;
    std::string e_lambda, e_mu;
    auto* eigen = app.add_subcommand("eigen", "Eigenvalue of x on T(mu) inside F(T(lambda))");
    add_common(eigen, ec);
    eigen->add_option("lambda", e_lambda)->required();
    eigen->add_option("mu", e_mu)->required();

    // fock
    Common fc;
    std::string f_word, f_start, f_mode = "plain";
    int f_n = 1;
    auto* fock = app.add_subcommand("fock", "Apply an operator word to a basis vector");
    add_common(fock, fc);
    fock->add_option("word", f_word, "Operators such as 'f0 e-1 f2'; the rightmost acts first")->required();
    fock->add_option("start", f_start, "Basis vector label")->required();
    fock->add_option("--mode", f_mode)
        ->check(CLI::IsMember({"plain", "twisted", "shifted", "tensor", "tautological", "wedge"}));
    fock->add_option("--n", f_n, "Wedge length");

    // lr
    Common lc;
    std::string l_lambda, l_mu, l_kappa;
    auto* lr = app.add_subcommand("lr", "Littlewood-Richardson coefficient");
    add_common(lr, lc, false);
    lr->add_option("lambda", l_lambda)->required();
    lr->add_option("mu", l_mu)->required();
    lr->add_option("kappa", l_kappa)->required();

    // verify
    Common vc;
    std::string v_range = "-3..3";
    VerifyOptions vo;
    auto* verify = app.add_subcommand("verify", "Run the invariant checks");
    add_common(verify, vc, false);
    verify->add_option("--t-range", v_range);
    verify->add_option("--max-size", vo.max_size)->check(CLI::Range(1, 6));
    verify->add_option("--seed", vo.seed);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kSyntax;
    }

    try {
        if (*diagram) {
            const Bipartition l = parse_bipartition(d_bip);
            const ParamT t = parse_param(dc.t);
            const WeightDiagram d = build_diagram(l, t, d_family == "d" ? Family::D : Family::Dprime);
            std::optional<Interval> range;
            if (!d_range.empty()) {
                auto [lo, hi] = parse_range(d_range);
                range = Interval{lo, hi};
            }
            emit(dc, diagram_to_json(d), render_diagram(d, range));
        } else if (*caps) {
            const Bipartition mu = parse_bipartition(c_bip);
            const ParamT t = parse_param(cc.t);
            if (t.is_generic()) throw std::invalid_argument("caps needs an integer t");
            const CapDiagram cd = build_caps(mu, t);
            Json j = diagram_to_json(cd.base);
            j["extended"] = {cd.extended.lo, cd.extended.hi};
            j["caps"] = Json::array();
            std::string text = render_diagram(cd.base, cd.extended) + "caps:";
            for (const Cap& c : cd.caps) {
                j["caps"].push_back({c.left, c.right});
                text += " (" + std::to_string(c.left) + "," + std::to_string(c.right) + ")";
            }
            j["outside_matched"] = cd.outside_matched;
            emit(cc, j, text + "\n");
        } else if (*mult) {
            const Bipartition l = parse_bipartition(m_lambda), m = parse_bipartition(m_mu);
            const ParamT t = parse_param(mc.t);
            const int v = mult_D(l, m, t);
            emit(mc, {{"t", param_to_json(t)}, {"lambda", l.to_string()}, {"mu", m.to_string()}, {"val", v}},
                 std::to_string(v) + "\n");
        } else if (*matrix) {
            const ParamT t = parse_param(xc.t);
            BipartitionMatrix m;
            if (x_kind == "D")
                m = D_matrix(t, x_size);
            else if (x_kind == "Dinv")
                m = D_inverse(t, x_size);
            else if (x_kind == "B")
                m = B_matrix(x_size);
            else if (x_kind == "b")
                m = b_matrix(t, x_size);
            else if (x_kind == "atilde")
                m = a_tilde(parse_index(x_index), t, x_size);
            else if (x_kind == "etilde")
                m = e_tilde(parse_index(x_index), t, x_size);
            else
                m = a_matrix(parse_index(x_index), t, x_size);
            emit(xc, matrix_to_json(m, t), matrix_text(m));
        } else if (*decompose) {
            const Bipartition l = parse_bipartition(k_bip);
            const ParamT t = parse_param(kc.t);
            Json terms = Json::array();
            std::string text = "T(" + l.to_string() + ") =";
            bool first = true;
            for (const auto& mu : bipartitions_up_to(l.size())) {
                if (mult_D(l, mu, t) == 0) continue;
                terms.push_back(mu.to_string());
                text += std::string(first ? " " : " + ") + "V(" + mu.to_string() + ")";
                first = false;
            }
            emit(kc, {{"t", param_to_json(t)}, {"lambda", l.to_string()}, {"standards", terms}}, text + "\n");
        } else if (*homdim) {
            const Bipartition l = parse_bipartition(h_lambda), m = parse_bipartition(h_mu);
            const ParamT t = parse_param(hc.t);
            const auto v = hom_dim(l, m, t);
            emit(hc, {{"t", param_to_json(t)}, {"lambda", l.to_string()}, {"mu", m.to_string()}, {"val", v}},
                 std::to_string(v) + "\n");
        } else if (*eigen) {
            const Bipartition l = parse_bipartition(e_lambda), m = parse_bipartition(e_mu);
            const ParamT t = parse_param(ec.t);
            const auto label = x_eigenvalue(l, m);
            Json j = label ? eigen_to_json(*label) : Json(nullptr);
            std::string text = label ? label->to_string() : "none";
            if (label && t.is_integer()) text += " = " + std::to_string(label->value(t.value()));
            emit(ec, j, text + "\n");
        } else if (*fock) {
            const auto word = parse_word(f_word);
            Mode mode;
            AnyVector v;
            const auto needs_t = [&] { return parse_param(fc.t).value(); };
            if (f_mode == "plain" || f_mode == "twisted" || f_mode == "shifted") {
                v = FockVector::basis(parse_partition(f_start));
                if (f_mode == "plain")
                    mode = Plain{};
                else if (f_mode == "twisted")
                    mode = TwistedDual{};
                else
                    mode = ShiftedDual{needs_t()};
            } else if (f_mode == "tensor") {
                v = BiFockVector::basis(parse_bipartition(f_start));
                mode = Tensor{needs_t()};
            } else if (f_mode == "tautological") {
                v = TautVector::basis(parse_int(f_start));
                mode = Tautological{};
            } else {
                const auto seq = parse_sequence(f_start);
                energy(seq);
                if (static_cast<int>(seq.size()) != f_n)
                    throw std::invalid_argument("wedge vector length differs from --n");
                v = WedgeVector::basis(seq);
                mode = Wedge{f_n};
            }
            for (auto it = word.rbegin(); it != word.rend(); ++it) v = apply_generator(it->first, it->second, mode, v);
            const Json j = vector_to_json(v);
            emit(fc, j, vector_text(j));
        } else if (*lr) {
            const Partition l = parse_partition(l_lambda), m = parse_partition(l_mu), k = parse_partition(l_kappa);
            const auto v = lr_coeff(l, m, k);
            emit(lc, {{"lambda", l.to_string()}, {"mu", m.to_string()}, {"kappa", k.to_string()}, {"val", v}},
                 std::to_string(v) + "\n");
        } else if (*verify) {
            std::tie(vo.t_lo, vo.t_hi) = parse_range(v_range);
            const auto results = run_verify(vo);
            Json j = Json::array();
            std::string text;
            std::string module;
            bool ok = true;
            for (const auto& r : results) {
                ok = ok && r.passed();
                j.push_back({{"module", r.module},
                             {"check", r.name},
                             {"instances", r.instances},
                             {"failures", r.failures},
                             {"advisory", r.advisory},
                             {"passed", r.passed()},
                             {"detail", r.detail}});
                if (r.module != module) {
                    module = r.module;
                    text += module + "\n";
                }
                const char* status = r.advisory ? "INFO" : (r.passed() ? "PASS" : "FAIL");
                text += "  [" + std::string(status) + "] " + r.name + " (" + std::to_string(r.instances) + " instances";
                if (r.failures && !r.advisory) text += ", " + std::to_string(r.failures) + " failed";
                text += ")";
                if (!r.detail.empty()) text += ": " + r.detail;
                text += "\n";
            }
            text += ok ? "all checks passed\n" : "some checks failed\n";
            emit(vc, j, text);
            return ok ? kOk : kFailed;
        }
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << " (token: '" << e.token() << "')\n";
        return kSyntax;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kFailed;
    }
    return kOk;
}
