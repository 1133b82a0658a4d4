#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "prepro/dot.hpp"
#include "prepro/errors.hpp"
#include "prepro/graded_quotient.hpp"
#include "prepro/grading.hpp"
#include "prepro/json_io.hpp"
#include "prepro/koszul.hpp"
#include "prepro/mckay.hpp"
#include "prepro/preprojective.hpp"
#include "prepro/superpotential.hpp"
#include "prepro/tensor_product.hpp"

namespace py = pybind11;
using namespace prepro;

namespace {

std::vector<std::vector<long>> dims_to_rows(const DimMatrix& d) {
    std::vector<std::vector<long>> rows(d.size(), std::vector<long>(d.size()));
    for (std::size_t t = 0; t < d.size(); ++t)
        for (std::size_t s = 0; s < d.size(); ++s) rows[t][s] = d.at(t, s);
    return rows;
}

PathVector pathvector_from_terms(
    const std::vector<std::pair<std::string, std::vector<ArrowId>>>& terms) {
    PathVector v;
    for (const auto& [coef, word] : terms)
        v.add_term(Path::of_word(word), rat_from_string(coef));
    return v;
}

std::vector<std::pair<std::string, std::vector<ArrowId>>> pathvector_terms(
    const PathVector& v) {
    std::vector<std::pair<std::string, std::vector<ArrowId>>> out;
    for (const auto& [p, c] : v.terms()) out.emplace_back(rat_to_string(c), p.word);
    return out;
}

std::string finiteness_kind(const Finiteness& f) {
    switch (f.kind) {
        case Finiteness::Kind::Finite: return "finite";
        case Finiteness::Kind::Infinite: return "infinite";
        default: return "inconclusive";
    }
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "quiver presentations, Koszul spaces, superpotentials and "
              "preprojective gradings";

    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<InvalidArgument>(m, "InvalidArgument", PyExc_ValueError);
    py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_RuntimeError);
    py::register_exception<LimitError>(m, "LimitError", PyExc_RuntimeError);

    py::class_<Vertex>(m, "Vertex")
        .def_readonly("id", &Vertex::id)
        .def_readonly("label", &Vertex::label);
    py::class_<Arrow>(m, "Arrow")
        .def_readonly("id", &Arrow::id)
        .def_readonly("source", &Arrow::source)
        .def_readonly("target", &Arrow::target)
        .def_readonly("label", &Arrow::label);

    py::class_<Quiver>(m, "Quiver")
        .def(py::init<>())
        .def("add_vertex", &Quiver::add_vertex)
        .def("add_arrow", &Quiver::add_arrow)
        .def_property_readonly("vertices", &Quiver::vertices)
        .def_property_readonly("arrows", &Quiver::arrows)
        .def("arrow_by_label", &Quiver::arrow_by_label)
        .def("vertex_by_label", &Quiver::vertex_by_label);

    py::class_<Path>(m, "Path")
        .def_static("trivial", &Path::trivial)
        .def_static("of_word", &Path::of_word)
        .def_readonly("word", &Path::word)
        .def_readonly("base", &Path::base)
        .def("__len__", &Path::length)
        .def("is_trivial", &Path::is_trivial)
        .def("__eq__", [](const Path& a, const Path& b) { return a == b; });

    py::class_<PathVector>(m, "PathVector")
        .def(py::init(&pathvector_from_terms))
        .def("terms", &pathvector_terms)
        .def("term_count", &PathVector::term_count)
        .def("__eq__", [](const PathVector& a, const PathVector& b) { return a == b; });

    py::class_<QuadraticPresentation>(m, "QuadraticPresentation")
        .def(py::init<Quiver, std::vector<PathVector>>())
        .def_property_readonly("quiver", &QuadraticPresentation::quiver,
                               py::return_value_policy::reference_internal)
        .def_property_readonly("relations", &QuadraticPresentation::relations)
        .def("to_json", [](const QuadraticPresentation& p) {
            return dump_document(make_document("presentation", presentation_to_json(p)));
        })
        .def_static("from_json", [](const std::string& text) {
            return presentation_from_document(parse_document(text));
        });

    py::class_<Superpotential>(m, "Superpotential")
        .def(py::init<const Quiver&, PathVector>())
        .def_property_readonly("degree", &Superpotential::degree)
        .def_property_readonly("form", &Superpotential::form);

    py::class_<CyclicGroupSpec>(m, "CyclicGroupSpec")
        .def(py::init<long, std::vector<long>>())
        .def_static("parse", &CyclicGroupSpec::parse)
        .def_readonly("r", &CyclicGroupSpec::r)
        .def_readonly("weights", &CyclicGroupSpec::weights)
        .def("in_sl", &CyclicGroupSpec::in_sl)
        .def("faithful", &CyclicGroupSpec::faithful)
        .def("normalized", &CyclicGroupSpec::normalized)
        .def("__str__", &CyclicGroupSpec::to_string);

    py::class_<Finiteness>(m, "Finiteness")
        .def_property_readonly("kind", &finiteness_kind)
        .def_readonly("total_dim", &Finiteness::total_dim)
        .def_readonly("witness", &Finiteness::witness)
        .def_readonly("bound", &Finiteness::bound);

    py::class_<GradingVerdict>(m, "GradingVerdict")
        .def_readonly("relations_homogeneous", &GradingVerdict::relations_homogeneous)
        .def_readonly("superpotential_term_degrees",
                      &GradingVerdict::superpotential_term_degrees)
        .def_readonly("gorenstein_parameter", &GradingVerdict::gorenstein_parameter)
        .def_readonly("degree0_finiteness", &GradingVerdict::degree0_finiteness);

    py::class_<GradingSearchResult>(m, "GradingSearchResult")
        .def_readonly("valid", &GradingSearchResult::valid)
        .def_readonly("assignments", &GradingSearchResult::assignments)
        .def_readonly("finite_count", &GradingSearchResult::finite_count)
        .def_readonly("infinite_count", &GradingSearchResult::infinite_count)
        .def_readonly("inconclusive_count", &GradingSearchResult::inconclusive_count);

    py::class_<GroupClassification>(m, "GroupClassification")
        .def_readonly("air", &GroupClassification::air)
        .def_readonly("air_generator_weights", &GroupClassification::air_generator_weights)
        .def_property_readonly("embeds",
                               [](const GroupClassification& c) { return to_string(c.embeds); })
        .def_property_readonly("verdict",
                               [](const GroupClassification& c) { return to_string(c.verdict); });

    py::class_<TopFormResult>(m, "TopFormResult")
        .def_readonly("ok", &TopFormResult::ok)
        .def_readonly("form", &TopFormResult::form)
        .def_property_readonly("dims",
                               [](const TopFormResult& r) { return dims_to_rows(r.dims); });

    py::class_<PreprojectivePresentation>(m, "PreprojectivePresentation")
        .def_readonly("presentation", &PreprojectivePresentation::presentation)
        .def_readonly("n", &PreprojectivePresentation::n)
        .def_readonly("generators", &PreprojectivePresentation::generators)
        .def_readonly("new_arrows", &PreprojectivePresentation::new_arrows)
        .def_readonly("new_relations", &PreprojectivePresentation::new_relations)
        .def_readonly("grading", &PreprojectivePresentation::grading);

    py::class_<TensorMap>(m, "TensorMap")
        .def_readonly("vertex", &TensorMap::vertex)
        .def_readonly("arrow_left", &TensorMap::arrow_left)
        .def_readonly("arrow_right", &TensorMap::arrow_right);
    py::class_<TensorProduct>(m, "TensorProduct")
        .def_readonly("presentation", &TensorProduct::presentation)
        .def_readonly("map", &TensorProduct::map);

    py::class_<KoszulityVerdict>(m, "KoszulityVerdict")
        .def_readonly("ok", &KoszulityVerdict::pass)
        .def_readonly("failed_degree", &KoszulityVerdict::failed_degree)
        .def_readonly("note", &KoszulityVerdict::note);

    m.def("mckay_presentation", &mckay_presentation);
    m.def("skew_superpotential", &skew_superpotential);
    m.def("air_grading", &air_grading);
    m.def("classify_group", &classify_group);
    m.def("graded_dims", [](const QuadraticPresentation& p, std::size_t l_max) {
        GradedQuotient gq(p);
        std::vector<long> dims;
        for (std::size_t l = 0; l <= l_max; ++l) dims.push_back(gq.total_dim(l));
        return dims;
    });
    m.def("koszul_dims", [](const QuadraticPresentation& p, std::size_t l_max) {
        std::vector<std::pair<std::size_t, long>> out;
        for (const auto& e : koszul_dims(p, l_max)) out.emplace_back(e.l, e.dim);
        return out;
    });
    m.def("top_form", &top_form);
    m.def("quadratic_dual", &quadratic_dual);
    m.def("koszulity_probe", &koszulity_probe, py::arg("presentation"),
          py::arg("d_max") = 8);
    m.def("is_zero_in_quotient", &is_zero_in_quotient);
    m.def("derive", &derive);
    m.def("derivation_quotient", &derivation_quotient);
    m.def("signed_cyclic_shift", &signed_cyclic_shift);
    m.def("check_superpotential", [](const Quiver& q, const PathVector& v) {
        auto res = check_superpotential(q, v);
        return std::make_pair(res.ok, res.reason);
    });
    m.def("build_preprojective", &build_preprojective, py::arg("presentation"), py::arg("n"),
          py::arg("probe_degree") = 8);
    m.def("preprojective_superpotential", &preprojective_superpotential);
    m.def("tensor_presentation", &tensor_presentation);
    m.def("lift_grading_sum", &lift_grading_sum);
    m.def("shuffle_product", &shuffle_product);
    m.def("validate_grading", &validate_grading);
    m.def("gorenstein_parameter", &gorenstein_parameter);
    m.def("degree_zero_part", &degree_zero_part);
    m.def("finiteness_check", &finiteness_check, py::arg("presentation"),
          py::arg("l_max") = 12);
    m.def(
        "grading_search",
        [](const QuadraticPresentation& p, const Superpotential& w, std::size_t l_max,
           std::size_t arrow_limit, bool brute) {
            GradingSearchOptions opts;
            opts.l_max = l_max;
            opts.arrow_limit = arrow_limit;
            opts.brute = brute;
            return grading_search(p, w, opts);
        },
        py::arg("presentation"), py::arg("superpotential"), py::arg("l_max") = 12,
        py::arg("arrow_limit") = 24, py::arg("brute") = false);
    m.def("enumerate_paths", &enumerate_paths, py::arg("quiver"), py::arg("length"),
          py::arg("source") = std::nullopt, py::arg("target") = std::nullopt);
    m.def("compose", &compose);
    m.def("find_cycles", py::overload_cast<const Quiver&>(&find_cycles));
    m.def("path_to_string", &path_to_string);
    m.def("to_dot", &to_dot, py::arg("quiver"), py::arg("grading") = std::nullopt);

    py::enum_<Side>(m, "Side").value("Left", Side::Left).value("Right", Side::Right);
}
