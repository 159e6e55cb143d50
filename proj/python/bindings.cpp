#include <sstream>

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "stbcsm/stbcsm.hpp"

namespace py = pybind11;
using namespace stbcsm;

namespace {

SimConfig config_from(const py::dict& kw) {
  SimConfig cfg;
  for (const auto& [k, v] : kw) {
    const std::string key = py::str(k);
    std::string value;
    if (py::isinstance<py::list>(v) || py::isinstance<py::tuple>(v)) {
      for (const auto& x : v) value += (value.empty() ? "" : ",") + std::string(py::str(x));
    } else {
      value = py::str(v);
    }
    apply_setting(cfg, key, value);
  }
  cfg.validate();
  return cfg;
}

py::dict record_dict(const BerRecord& r) {
  py::dict d;
  d["scheme"] = to_string(r.scheme);
  d["variant"] = to_string(r.variant);
  d["n_t"] = r.n_t;
  d["n_r"] = r.n_r;
  d["mod"] = r.modulation;
  d["L"] = r.elements;
  d["theta"] = r.theta;
  d["snr_db"] = r.snr_db;
  d["bits"] = r.bits;
  d["errors"] = r.errors;
  d["ber"] = r.ber;
  d["seed"] = r.seed;
  return d;
}

}  // namespace

PYBIND11_MODULE(_stbcsm, m) {
  m.doc() = "SM / STBC-SM / V-BLAST link-level BER simulator";

  static py::exception<Error> base(m, "Error", PyExc_RuntimeError);
  static py::exception<ConfigError> config_error(m, "ConfigError", base.ptr());
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const ConfigError& e) {
      py::set_error(config_error, e.what());
    } catch (const InvalidOrderError& e) {
      py::set_error(PyExc_ValueError, e.what());
    } catch (const LengthMismatchError& e) {
      py::set_error(PyExc_ValueError, e.what());
    } catch (const Error& e) {
      py::set_error(base, e.what());
    }
  });

  py::class_<Constellation>(m, "Constellation")
      .def_static("parse", &Constellation::parse, py::arg("name"))
      .def_property_readonly("order", &Constellation::order)
      .def_property_readonly("bits_per_symbol", &Constellation::bits_per_symbol)
      .def_property_readonly("name", &Constellation::name)
      .def_property_readonly("points", [](const Constellation& c) { return std::vector<cd>(c.points().begin(), c.points().end()); })
      .def("map_bits", [](const Constellation& c, const Bits& b) { return c.map_bits(b); }, py::arg("bits"))
      .def("nearest_label", &Constellation::nearest_label);

  m.def("spectral_efficiency", &spectral_efficiency, py::arg("codewords"), py::arg("order"));
  m.def("codeword_count", &stbcsm_codeword_count, py::arg("n_t"));
  m.def(
      "codebook",
      [](int n_t, double theta) {
        const auto book = build_codebooks(n_t, theta);
        std::vector<py::tuple> out;
        for (const auto& d : book.descriptors()) out.push_back(py::make_tuple(d.first, d.second, d.rotation));
        return out;
      },
      py::arg("n_t"), py::arg("theta"), "List of (first, second, rotation) per codeword.");
  m.def(
      "min_cgd", [](int n_t, const std::string& mod, double theta) {
        return min_coding_gain_distance(n_t, Constellation::parse(mod), theta);
      },
      py::arg("n_t"), py::arg("modulation"), py::arg("theta"));
  m.def(
      "optimize_theta",
      [](int n_t, const std::string& mod, double step) {
        const auto r = optimize_rotation_angle(n_t, Constellation::parse(mod), step);
        return py::make_tuple(r.theta, r.min_cgd);
      },
      py::arg("n_t"), py::arg("modulation") = "BPSK", py::arg("grid_step") = kThetaGridStep);

  m.def(
      "zf_precoder", [](const CMatrix& h) { const auto p = zf_precoder(h); return py::make_tuple(p.p, p.beta); },
      py::arg("h"), "Returns (P, beta) with P unnormalized.");
  m.def(
      "mmse_precoder",
      [](const CMatrix& h, double s2) { const auto p = mmse_precoder(h, s2); return py::make_tuple(p.p, p.beta); },
      py::arg("h"), py::arg("sigma2"));
  m.def(
      "equivalent_channel",
      [](const CMatrix& h, int a, int b, cd phi) { return equivalent_channel(h, {a, b, phi}); }, py::arg("h"),
      py::arg("first"), py::arg("second"), py::arg("rotation") = cd(1.0, 0.0));
  m.def(
      "steering_weights",
      [](int l, double aod) {
        ArrayConfig cfg = ArrayConfig::with_elements(l);
        cfg.aod_rad = aod;
        cfg.validate();
        return CVector(steering_weights(cfg));
      },
      py::arg("elements"), py::arg("aod_rad") = 0.0);
  m.def("array_gain_db", &array_gain_db, py::arg("elements"));
  m.def("noise_variance", [](double snr) { return noise_variance_from_snr(snr); }, py::arg("snr_db"));

  m.def(
      "run_sweep",
      [](int workers, const py::kwargs& kw) {
        const SimConfig cfg = config_from(kw);
        std::vector<BerRecord> recs;
        {
          py::gil_scoped_release release;
          recs = run_sweep(cfg, workers);
        }
        py::list out;
        for (const auto& r : recs) out.append(record_dict(r));
        return out;
      },
      py::arg("workers") = 1,
      "Run a sweep; keyword arguments are config keys (scheme, n_t, n_r, modulation, variant, L, snr_grid, ...).");
  m.def(
      "run_sweep_csv",
      [](int workers, const py::kwargs& kw) {
        const SimConfig cfg = config_from(kw);
        std::ostringstream out;
        {
          py::gil_scoped_release release;
          write_csv(out, run_sweep(cfg, workers));
        }
        return out.str();
      },
      py::arg("workers") = 1);
  m.def(
      "snr_gap_at_ber",
      [](const std::vector<std::pair<double, double>>& a, const std::vector<std::pair<double, double>>& b,
         double target) {
        auto recs = [](const std::vector<std::pair<double, double>>& pts) {
          std::vector<BerRecord> out;
          for (auto [snr, ber] : pts) {
            BerRecord r;
            r.snr_db = snr;
            r.ber = ber;
            r.errors = ber > 0.0 ? 1 : 0;
            out.push_back(r);
          }
          return out;
        };
        return snr_gap_at_ber(recs(a), recs(b), target);
      },
      py::arg("curve_a"), py::arg("curve_b"), py::arg("target_ber"), "Curves are lists of (snr_db, ber).");
  m.attr("CSV_HEADER") = kCsvHeader;
  m.attr("figure_names") = figure_names();
}
