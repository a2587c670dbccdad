#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "deligne/caps.hpp"
#include "deligne/fock.hpp"
#include "deligne/grothendieck.hpp"
#include "deligne/json_io.hpp"
#include "deligne/lr.hpp"
#include "deligne/verify.hpp"

namespace py = pybind11;
using namespace deligne;

namespace {

// A bipartition is either "[[..],[..]]" or a pair of integer sequences.
Bipartition to_bipartition(const py::object& o) {
    if (py::isinstance<py::str>(o)) return parse_bipartition(o.cast<std::string>());
    const auto parts = o.cast<std::vector<std::vector<int>>>();
    if (parts.size() != 2) throw py::value_error("a bipartition needs exactly two partitions");
    return {Partition(parts[0]), Partition(parts[1])};
}

Partition to_partition(const py::object& o) {
    if (py::isinstance<py::str>(o)) return parse_partition(o.cast<std::string>());
    return Partition(o.cast<std::vector<int>>());
}

ParamT to_param(const py::object& o) {
    if (py::isinstance<py::str>(o)) return parse_param(o.cast<std::string>());
    return ParamT::integer(o.cast<int>());
}

Family to_family(const std::string& name) {
    if (name == "d") return Family::D;
    if (name == "dprime") return Family::Dprime;
    throw py::value_error("family must be 'd' or 'dprime'");
}

Gen to_gen(const std::string& name) {
    if (name == "f") return Gen::F;
    if (name == "e") return Gen::E;
    throw py::value_error("generator must be 'f' or 'e'");
}

// "3", "int:3" or "shifted:3".
FunctorIndex to_index(const py::object& o) {
    if (!py::isinstance<py::str>(o)) return FunctorIndex::plain(o.cast<int>());
    const auto text = o.cast<std::string>();
    const auto colon = text.find(':');
    if (colon == std::string::npos) return FunctorIndex::plain(std::stoi(text));
    const std::string tag = text.substr(0, colon);
    const int c = std::stoi(text.substr(colon + 1));
    if (tag == "int") return FunctorIndex::integer(c);
    if (tag == "shifted") return FunctorIndex::shifted(c);
    throw py::value_error("unknown index tag: " + tag);
}

py::object from_json(const Json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

std::vector<std::tuple<std::string, std::string, std::int64_t>> entries(const BipartitionMatrix& m) {
    std::vector<std::tuple<std::string, std::string, std::int64_t>> out;
    for (const auto& [r, row] : m.rows())
        for (const auto& [c, v] : row) out.emplace_back(r.to_string(), c.to_string(), v);
    return out;
}

}  // namespace

PYBIND11_MODULE(_deligne, m) {
    m.doc() = "Weight diagrams, lift multiplicities and Grothendieck-level sl_Z actions for Rep(GL_t)";

    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<InconsistencyError>(m, "InconsistencyError", PyExc_RuntimeError);

    m.def(
        "diagram",
        [](const py::object& lambda, const py::object& t, const std::string& family, int lo, int hi) {
            const Bipartition l = to_bipartition(lambda);
            std::string s;
            for (int x = lo; x <= hi; ++x) s += symbol_char(symbol_at(l, to_param(t), to_family(family), x));
            return s;
        },
        py::arg("lam"), py::arg("t"), py::arg("family") = "dprime", py::arg("lo") = -5, py::arg("hi") = 5,
        "Symbols of the weight diagram over positions lo..hi.");

    m.def(
        "diagram_json",
        [](const py::object& lambda, const py::object& t, const std::string& family) {
            return from_json(diagram_to_json(build_diagram(to_bipartition(lambda), to_param(t), to_family(family))));
        },
        py::arg("lam"), py::arg("t"), py::arg("family") = "dprime");

    m.def(
        "caps",
        [](const py::object& mu, int t) {
            std::vector<std::pair<int, int>> out;
            for (const Cap& c : build_caps(to_bipartition(mu), ParamT::integer(t)).caps) out.emplace_back(c.left, c.right);
            return out;
        },
        py::arg("mu"), py::arg("t"), "Caps (cross, circle) of the cap diagram of d'_mu.");

    m.def(
        "mult",
        [](const py::object& lambda, const py::object& mu, const py::object& t) {
            return mult_D(to_bipartition(lambda), to_bipartition(mu), to_param(t));
        },
        py::arg("lam"), py::arg("mu"), py::arg("t"), "The multiplicity (T(lam) : V(mu)).");

    m.def(
        "matrix",
        [](const std::string& kind, const py::object& t, int max_size, const py::object& a) {
            const ParamT tp = to_param(t);
            if (kind == "D") return entries(D_matrix(tp, max_size));
            if (kind == "Dinv") return entries(D_inverse(tp, max_size));
            if (kind == "B") return entries(B_matrix(max_size));
            if (kind == "b") return entries(b_matrix(tp, max_size));
            if (a.is_none()) throw py::value_error("matrix kind " + kind + " needs an index a");
            if (kind == "atilde") return entries(a_tilde(to_index(a), tp, max_size));
            if (kind == "etilde") return entries(e_tilde(to_index(a), tp, max_size));
            if (kind == "A") return entries(a_matrix(to_index(a), tp, max_size));
            throw py::value_error("unknown matrix kind: " + kind);
        },
        py::arg("kind"), py::arg("t"), py::arg("max_size"), py::arg("a") = py::none(),
        "Nonzero entries (row, col, value) of D, Dinv, B, b, atilde, etilde or A.");

    m.def(
        "hom_dim",
        [](const py::object& lambda, const py::object& mu, const py::object& t) {
            return hom_dim(to_bipartition(lambda), to_bipartition(mu), to_param(t));
        },
        py::arg("lam"), py::arg("mu"), py::arg("t"));

    m.def(
        "eigenvalue",
        [](const py::object& lambda, const py::object& mu) -> py::object {
            const auto e = x_eigenvalue(to_bipartition(lambda), to_bipartition(mu));
            if (!e) return py::none();
            return from_json(eigen_to_json(*e));
        },
        py::arg("lam"), py::arg("mu"), "Eigenvalue label of x on the T(mu) summand of F(T(lam)), or None.");

    m.def(
        "f_on_standard",
        [](const py::object& lambda, const py::object& a, const py::object& t) {
            const StandardFiltration s = f_on_standard(to_bipartition(lambda), to_index(a), to_param(t));
            auto str = [](const std::optional<Bipartition>& b) -> py::object {
                return b ? py::object(py::str(b->to_string())) : py::none();
            };
            return py::make_tuple(str(s.sub), str(s.quot));
        },
        py::arg("lam"), py::arg("a"), py::arg("t"), "(sub, quot) of the standard filtration of F_a V(lam).");

    m.def(
        "lr_coeff",
        [](const py::object& lambda, const py::object& mu, const py::object& kappa) {
            return lr_coeff(to_partition(lambda), to_partition(mu), to_partition(kappa));
        },
        py::arg("lam"), py::arg("mu"), py::arg("kappa"));

    m.def(
        "fock_apply",
        [](const std::string& gen, int a, const py::object& nu) {
            return from_json(vector_to_json(apply(to_gen(gen), a, Plain{}, FockVector::basis(to_partition(nu)))));
        },
        py::arg("gen"), py::arg("a"), py::arg("nu"), "f_a or e_a on the Fock space vector v_nu.");

    m.def(
        "tensor_apply",
        [](const std::string& gen, int a, int t, const py::object& lambda) {
            return from_json(
                vector_to_json(apply(to_gen(gen), a, Tensor{t}, BiFockVector::basis(to_bipartition(lambda)))));
        },
        py::arg("gen"), py::arg("a"), py::arg("t"), py::arg("lam"),
        "f_a or e_a on F tensor the t-shifted dual, at the basis vector of lam.");

    m.def(
        "verify",
        [](int t_lo, int t_hi, int max_size, std::uint64_t seed) {
            VerifyOptions o;
            o.t_lo = t_lo;
            o.t_hi = t_hi;
            o.max_size = max_size;
            o.seed = seed;
            py::list out;
            for (const auto& r : run_verify(o)) {
                py::dict d;
                d["module"] = r.module;
                d["name"] = r.name;
                d["instances"] = r.instances;
                d["failures"] = r.failures;
                d["advisory"] = r.advisory;
                d["passed"] = r.passed();
                d["detail"] = r.detail;
                out.append(d);
            }
            return out;
        },
        py::arg("t_lo") = -3, py::arg("t_hi") = 3, py::arg("max_size") = 4, py::arg("seed") = 7,
        "Run the invariant suite; one dict per named check.");
}
