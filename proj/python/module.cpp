// Python bindings for the digitsum core. Integers cross the boundary as
// arbitrary-precision Python ints, rationals as fractions.Fraction.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "digitsum/digits.hpp"
#include "digitsum/takagi.hpp"
#include "digitsum/tableau.hpp"
#include "digitsum/verifier.hpp"

namespace py = pybind11;

namespace pybind11::detail {

template <>
struct type_caster<mpz_class> {
  PYBIND11_TYPE_CASTER(mpz_class, const_name("int"));

  bool load(handle src, bool) {
    if (!PyLong_Check(src.ptr())) return false;
    value = mpz_class(std::string(py::str(src)), 10);
    return true;
  }

  static handle cast(const mpz_class& v, return_value_policy, handle) {
    return PyLong_FromString(v.get_str().c_str(), nullptr, 10);
  }
};

template <>
struct type_caster<mpq_class> {
  PYBIND11_TYPE_CASTER(mpq_class, const_name("Fraction"));

  bool load(handle src, bool) {
    if (PyLong_Check(src.ptr())) {
      value = mpq_class(mpz_class(std::string(py::str(src)), 10));
      return true;
    }
    // Anything Fraction-like: integral numerator/denominator attributes.
    if (!py::hasattr(src, "numerator") || !py::hasattr(src, "denominator")) {
      return false;
    }
    const py::object num = src.attr("numerator");
    const py::object den = src.attr("denominator");
    if (!PyLong_Check(num.ptr()) || !PyLong_Check(den.ptr())) return false;
    value = mpq_class(mpz_class(std::string(py::str(num)), 10),
                      mpz_class(std::string(py::str(den)), 10));
    value.canonicalize();
    return true;
  }

  static handle cast(const mpq_class& v, return_value_policy, handle) {
    py::object fraction = py::module_::import("fractions").attr("Fraction");
    py::object num =
        py::reinterpret_steal<py::object>(type_caster<mpz_class>::cast(
            v.get_num(), return_value_policy::automatic, {}));
    py::object den =
        py::reinterpret_steal<py::object>(type_caster<mpz_class>::cast(
            v.get_den(), return_value_policy::automatic, {}));
    return fraction(num, den).release();
  }
};

}  // namespace pybind11::detail

namespace {

using digitsum::BAdicRational;
using digitsum::Base;
using digitsum::Natural;
using digitsum::Rational;

py::dict truncated_to_dict(const digitsum::TruncatedValue& t) {
  py::dict d;
  d["value"] = t.value;
  d["error_bound"] = t.error_bound;
  d["depth"] = t.depth;
  return d;
}

py::dict report_to_dict(const digitsum::SweepReport& report) {
  return py::module_::import("json").attr("loads")(report_to_json(report));
}

}  // namespace

PYBIND11_MODULE(_digitsum, m) {
  m.doc() = "Exact base-b digital sums, their inequalities, and the "
            "associated Takagi-like functions";

  m.def(
      "digits",
      [](const Natural& n, int base) {
        return digitsum::digits(n, Base(base)).digits;
      },
      py::arg("n"), py::arg("base"),
      "Base-b digits of n, least significant first");
  m.def(
      "digit_sum",
      [](const Natural& n, int base) {
        return digitsum::digit_sum(n, Base(base));
      },
      py::arg("n"), py::arg("base"));
  m.def(
      "cumulative_digit_sum",
      [](const Natural& n, int base) {
        return digitsum::cumulative_digit_sum(n, Base(base));
      },
      py::arg("n"), py::arg("base"),
      "Sum of digit_sum over 0..n-1, in O(log n) big-integer steps");
  m.def(
      "cumulative_digit_sum_naive",
      [](const Natural& n, int base) {
        return digitsum::cumulative_digit_sum_naive(n, Base(base));
      },
      py::arg("n"), py::arg("base"));
  m.def(
      "block_sum",
      [](const Natural& s, const Natural& t, int base) {
        return digitsum::block_sum(s, t, Base(base));
      },
      py::arg("s"), py::arg("t"), py::arg("base"));
  m.def(
      "average_digit_sum",
      [](const Natural& s, const Natural& t, int base) {
        return digitsum::average_digit_sum(s, t, Base(base));
      },
      py::arg("s"), py::arg("t"), py::arg("base"));
  m.def(
      "digit_dominates",
      [](const Natural& n, const Natural& m_, int base) {
        return digitsum::digit_dominates(n, m_, Base(base));
      },
      py::arg("n"), py::arg("m"), py::arg("base"));
  m.def(
      "add_power_bound_check",
      [](const Natural& n, const std::vector<unsigned long>& powers,
         int base) {
        return digitsum::add_power_bound_check(n, powers, Base(base));
      },
      py::arg("n"), py::arg("powers"), py::arg("base"));

  m.def(
      "build_tableau",
      [](int base, long long k) {
        return digitsum::build_tableau(Base(base), k).entries;
      },
      py::arg("base"), py::arg("k"),
      "The canonical b x k arrangement of 0..bk-1, row-major");
  m.def(
      "verify_tableau",
      [](const std::vector<std::vector<long long>>& entries, int base) {
        const long long k =
            entries.empty() ? 0 : static_cast<long long>(entries[0].size());
        const auto report = digitsum::verify_tableau(
            digitsum::Tableau{Base(base), k, entries});
        py::list violations;
        for (const auto& v : report.violations) {
          py::dict d;
          d["row"] = v.row;
          d["col"] = v.col;
          d["detail"] = v.detail;
          violations.append(d);
        }
        py::dict out;
        out["valid"] = report.valid;
        out["violations"] = violations;
        return out;
      },
      py::arg("entries"), py::arg("base"));

  m.def(
      "g_exact",
      [](const Rational& x, int base) {
        return digitsum::g_exact(x, Base(base));
      },
      py::arg("x"), py::arg("base"));
  m.def(
      "h_partial",
      [](const Rational& x, int base, unsigned depth) {
        return digitsum::h_partial(x, Base(base), depth);
      },
      py::arg("x"), py::arg("base"), py::arg("depth"));
  m.def(
      "h_at_badic",
      [](const Natural& k, unsigned level, int base) {
        return digitsum::h_at_badic(BAdicRational(k, level, Base(base)));
      },
      py::arg("k"), py::arg("level"), py::arg("base"),
      "h_b(k / base**level), exact");
  m.def(
      "omega_at_badic",
      [](const Natural& k, unsigned level, int base) {
        return digitsum::omega_at_badic(BAdicRational(k, level, Base(base)));
      },
      py::arg("k"), py::arg("level"), py::arg("base"));
  m.def(
      "phi",
      [](const Rational& x, int base) { return digitsum::phi(x, Base(base)); },
      py::arg("x"), py::arg("base"));
  m.def(
      "h_truncated",
      [](const Rational& x, int base, unsigned depth) {
        return truncated_to_dict(digitsum::h_truncated(x, Base(base), depth));
      },
      py::arg("x"), py::arg("base"), py::arg("depth") = 40);
  m.def(
      "delange_F",
      [](const Rational& x, int base, unsigned depth) {
        return truncated_to_dict(digitsum::delange_F(x, Base(base), depth));
      },
      py::arg("x"), py::arg("base"), py::arg("depth") = 40);
  m.def(
      "delange_residual",
      [](const Natural& n, int base, unsigned depth) {
        return truncated_to_dict(
            digitsum::delange_residual(n, Base(base), depth));
      },
      py::arg("n"), py::arg("base"), py::arg("depth") = 40);

  m.def(
      "superadditivity_slack",
      [](const Natural& m_, const Natural& n, int base) {
        return digitsum::superadditivity_slack(m_, n, Base(base));
      },
      py::arg("m"), py::arg("n"), py::arg("base"));
  m.def(
      "ternary_slack",
      [](const Natural& k, const Natural& l, const Natural& m_) {
        return digitsum::ternary_slack(k, l, m_);
      },
      py::arg("k"), py::arg("l"), py::arg("m"));
  m.def(
      "general_bound_slack",
      [](const Natural& m_, const Natural& k, int base) {
        return digitsum::general_bound_slack(m_, k, Base(base));
      },
      py::arg("m"), py::arg("k"), py::arg("base"));
  m.def(
      "times_b_slack",
      [](const Natural& n, const Natural& k, int base) {
        return digitsum::times_b_slack(n, k, Base(base));
      },
      py::arg("n"), py::arg("k"), py::arg("base"));
  m.def(
      "times_b_average_slack",
      [](const Natural& n, const Natural& k, int base) {
        return digitsum::times_b_average_slack(n, k, Base(base));
      },
      py::arg("n"), py::arg("k"), py::arg("base"));
  m.def(
      "approx_convexity_h_slack",
      [](const Natural& m_, const Natural& k, unsigned level, int base) {
        return digitsum::approx_convexity_h_slack(m_, k, level, Base(base));
      },
      py::arg("m"), py::arg("k"), py::arg("level"), py::arg("base"));
  m.def(
      "lev_slack",
      [](const Natural& m_, const Natural& k, const Natural& l,
         unsigned level) { return digitsum::lev_slack(m_, k, l, level); },
      py::arg("m"), py::arg("k"), py::arg("l"), py::arg("level"));
  m.def(
      "sharpness_ratio",
      [](int base, unsigned n) {
        return digitsum::sharpness_ratio(Base(base), n);
      },
      py::arg("base"), py::arg("n"));

  m.def(
      "sweep",
      [](const std::string& theorem, int base, long long max_m,
         long long max_n, long long max_k, int level, long long witness_cap,
         int jobs) {
        const auto id = digitsum::theorem_from_name(theorem);
        if (!id) {
          throw std::invalid_argument("unknown theorem '" + theorem + "'");
        }
        digitsum::SweepRange range;
        range.base = base;
        range.max_m = max_m;
        range.max_n = max_n;
        range.max_k = max_k;
        range.level = level;
        range.witness_cap = witness_cap;
        range.jobs = jobs;
        return report_to_dict(digitsum::sweep(*id, range));
      },
      py::arg("theorem"), py::arg("base") = 2, py::arg("max_m") = -1,
      py::arg("max_n") = -1, py::arg("max_k") = -1, py::arg("level") = -1,
      py::arg("witness_cap") = 1000, py::arg("jobs") = 1,
      "Exhaustive slack sweep; returns the report as a dict");
}
