// Copyright 2026 The reltps Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "reltps/entanglement.h"
#include "reltps/io.h"
#include "reltps/sim.h"
#include "reltps/states.h"
#include "reltps/tps.h"
#include "reltps/verify.h"

namespace py = pybind11;
using namespace reltps;

namespace {

using CArray = py::array_t<Complex, py::array::c_style | py::array::forcecast>;

template <size_t N>
py::array_t<Complex> to_numpy(const Mat<N> &m) {
    py::array_t<Complex> out({N, N});
    auto view = out.template mutable_unchecked<2>();
    for (size_t r = 0; r < N; r++) {
        for (size_t c = 0; c < N; c++) {
            view(r, c) = m(r, c);
        }
    }
    return out;
}

template <size_t N>
py::array_t<Complex> to_numpy(const Vec<N> &v) {
    py::array_t<Complex> out(N);
    auto view = out.template mutable_unchecked<1>();
    for (size_t k = 0; k < N; k++) {
        view(k) = v[k];
    }
    return out;
}

template <size_t N>
Mat<N> to_mat(const CArray &a) {
    if (a.ndim() != 2 || a.shape(0) != N || a.shape(1) != N) {
        throw py::value_error("expected a " + std::to_string(N) + "x" + std::to_string(N) + " matrix");
    }
    auto view = a.unchecked<2>();
    Mat<N> m;
    for (size_t r = 0; r < N; r++) {
        for (size_t c = 0; c < N; c++) {
            m(r, c) = view(r, c);
        }
    }
    return m;
}

template <size_t N>
Vec<N> to_vec(const CArray &a) {
    if (a.ndim() != 1 || a.shape(0) != N) {
        throw py::value_error("expected " + std::to_string(N) + " amplitudes");
    }
    auto view = a.unchecked<1>();
    Vec<N> v;
    for (size_t k = 0; k < N; k++) {
        v[k] = view(k);
    }
    return v;
}

TpsLabel label_arg(const std::string &text) {
    auto label = parse_label(text);
    if (!label) {
        throw py::value_error("invalid label '" + text + "' (must be one of 123, 132, 213, 231, 312, 321)");
    }
    return *label;
}

Side side_arg(const std::string &text) {
    if (text == "left") return Side::Left;
    if (text == "right") return Side::Right;
    throw py::value_error("side must be 'left' or 'right'");
}

StateVec state_arg(const CArray &amplitudes, bool normalize) {
    Ket4 v = to_vec<4>(amplitudes);
    return normalize ? StateVec::normalized(v) : StateVec(v);
}

py::object json_to_python(const Json &doc) {
    return py::module_::import("json").attr("loads")(doc.dump());
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Relative tensor product structures on C^4";
    m.attr("__version__") = std::string(kVersion);
    m.attr("LABELS") = py::make_tuple("123", "132", "213", "231", "312", "321");

    m.def(
        "perm_unitary", [](const std::string &label) { return to_numpy(perm_unitary(label_arg(label))); },
        py::arg("label"));
    m.def(
        "tensor_op",
        [](const std::string &label, const CArray &a, const CArray &b) {
            return to_numpy(tensor_op(label_arg(label), to_mat<2>(a), to_mat<2>(b)));
        },
        py::arg("label"), py::arg("a"), py::arg("b"));
    m.def(
        "tensor_ket",
        [](const std::string &label, const CArray &x, const CArray &y) {
            return to_numpy(tensor_ket(label_arg(label), to_vec<2>(x), to_vec<2>(y)));
        },
        py::arg("label"), py::arg("x"), py::arg("y"));
    m.def(
        "basis_ket", [](const std::string &label, int r, int s) {
            if ((r != 0 && r != 1) || (s != 0 && s != 1)) {
                throw py::value_error("bits must be 0 or 1");
            }
            return to_numpy(basis_ket(label_arg(label), r, s).ket());
        },
        py::arg("label"), py::arg("r"), py::arg("s"));
    m.def(
        "subsystem_projector",
        [](const std::string &label, const std::string &side, int alpha) {
            if (alpha != 0 && alpha != 1) {
                throw py::value_error("alpha must be 0 or 1");
            }
            Proposition p = subsystem_projector(label_arg(label), side_arg(side), alpha);
            return py::make_tuple(to_numpy(p.projector), p.text);
        },
        py::arg("label"), py::arg("side"), py::arg("alpha"));
    m.def(
        "compose",
        [](const std::string &outer, const std::string &inner) {
            return std::string(label_name(compose(label_arg(outer), label_arg(inner))));
        },
        py::arg("outer"), py::arg("inner"));
    m.def(
        "mixed_product_defect",
        [](const std::string &left, const std::string &right, const CArray &a, const CArray &b, const CArray &c,
           const CArray &d) {
            return mixed_product_defect(label_arg(left), label_arg(right), to_mat<2>(a), to_mat<2>(b), to_mat<2>(c),
                                        to_mat<2>(d));
        },
        py::arg("left"), py::arg("right"), py::arg("a"), py::arg("b"), py::arg("c"), py::arg("d"));

    m.def(
        "builtin_state",
        [](const std::string &name) {
            auto s = builtin_state(name);
            if (!s) {
                throw py::value_error("unknown state '" + name + "'");
            }
            return to_numpy(s->ket());
        },
        py::arg("name"));
    m.def(
        "classify",
        [](const CArray &amplitudes, bool normalize) {
            StateVec psi = state_arg(amplitudes, normalize);
            return json_to_python(classification_to_json(psi, classify_all(psi)));
        },
        py::arg("amplitudes"), py::arg("normalize") = false);
    m.def(
        "reduced_purity",
        [](const CArray &amplitudes, const std::string &label, const std::string &side, bool normalize) {
            return reduced_purity(state_arg(amplitudes, normalize), label_arg(label), side_arg(side));
        },
        py::arg("amplitudes"), py::arg("label"), py::arg("side") = "left", py::arg("normalize") = false);
    m.def(
        "analytic_probs",
        [](const CArray &amplitudes, const std::string &label, bool normalize) {
            return analytic_probs(state_arg(amplitudes, normalize), label_arg(label));
        },
        py::arg("amplitudes"), py::arg("label"), py::arg("normalize") = false);
    m.def(
        "simulate",
        [](const CArray &amplitudes, const std::string &label, uint64_t shots, uint64_t seed, bool normalize) {
            ExperimentConfig cfg{state_arg(amplitudes, normalize), label_arg(label), shots, seed};
            CountsTable counts;
            {
                py::gil_scoped_release release;
                counts = sample_counts(cfg);
            }
            return json_to_python(simulation_to_json(cfg, counts));
        },
        py::arg("amplitudes"), py::arg("label"), py::arg("shots") = 100000, py::arg("seed") = 0,
        py::arg("normalize") = false);
    m.def(
        "verify",
        [](uint64_t seed) {
            VerificationReport report;
            {
                py::gil_scoped_release release;
                report = run_all(seed);
            }
            return json_to_python(report_to_json(report));
        },
        py::arg("seed") = 0);
}
