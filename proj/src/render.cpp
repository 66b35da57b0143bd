#include "fibgen/render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <iomanip>
#include <sstream>

namespace fibgen::render {

namespace {

// Fixed palette for best_lower buckets 0..12 (values clamp at 12).
constexpr const char* kPalette[13] = {
    "#0d0887", "#3b049a", "#5c01a6", "#7e03a8", "#9c179e", "#b52f8c",
    "#cc4778", "#de5f65", "#ed7953", "#f89540", "#fdb42f", "#fbd524",
    "#f0f921"};

std::string witness_string(const BoundCertificate& cert) {
  std::ostringstream os;
  if (const auto* w = std::get_if<DegenerationWitness>(&cert.witness)) {
    os << "p=" << w->p << " e=" << w->e << " gamma=" << w->gamma;
  } else if (const auto* t = std::get_if<ThresholdWitness>(&cert.witness)) {
    os << "p=" << t->p << " g=" << t->g << " r=" << t->r << " e=" << t->e;
  } else if (const auto* c = std::get_if<ClosedFormParams>(&cert.witness)) {
    os << "iota=" << c->iota << " theta=" << format_decimal_floor(c->theta, 6);
  }
  return os.str();
}

std::int64_t nice_step(std::int64_t range) {
  for (const std::int64_t s :
       {std::int64_t{1}, std::int64_t{2}, std::int64_t{5}, std::int64_t{10},
        std::int64_t{20}, std::int64_t{50}, std::int64_t{100},
        std::int64_t{200}, std::int64_t{500}, std::int64_t{1000}})
    if (range / s <= 10) return s;
  return 2000;
}

}  // namespace

std::string format_decimal_floor(double v, int places) {
  const long double scale = std::pow(10.0L, places);
  const long double floored =
      std::floor(static_cast<long double>(v) * scale) / scale;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*Lf", places, floored);
  return buf;
}

std::string value_string(const BoundCertificate& cert) {
  if (cert.exact()) return std::get<Rat>(cert.value).str();
  return format_decimal_floor(std::get<double>(cert.value), 6);
}

std::string report_human(const Report& rep) {
  std::ostringstream os;
  os << "hypersurface X_{n,d} with n=" << rep.h.n << " d=" << rep.h.d
     << " (fano index " << rep.h.fano_index() << ")\n";
  for (const auto& c : rep.certificates) {
    os << "  " << (c.direction == Direction::Lower ? "lower" : "upper") << "  "
       << std::left << std::setw(24) << cert_kind_name(c.kind) << " value="
       << std::setw(12) << value_string(c) << " integer=" << std::setw(6)
       << c.integer_value << " [" << hypothesis_name(c.hypothesis) << "]";
    const std::string w = witness_string(c);
    if (!w.empty()) os << "  " << w;
    if (c.conditional()) os << "  conditional: " << c.conditional_note;
    os << "\n";
  }
  os << "best unconditional lower bound: " << rep.best_lower << " via "
     << cert_kind_name(rep.best_kind) << "\n"
     << "upper bound on fibering genus: " << rep.upper_genus << "\n"
     << "upper bound on fibering gonality: " << rep.upper_gonality << "\n";
  if (!rep.sanity_ok) os << "WARNING: best lower bound exceeds upper bound\n";
  return os.str();
}

json report_json(const Report& rep) {
  json j;
  j["n"] = rep.h.n;
  j["d"] = rep.h.d;
  json certs = json::array();
  for (const auto& c : rep.certificates) {
    json jc;
    jc["kind"] = cert_kind_name(c.kind);
    jc["direction"] = c.direction == Direction::Lower ? "lower" : "upper";
    jc["value"] = value_string(c);
    jc["integer_value"] = c.integer_value;
    jc["hypothesis"] = hypothesis_name(c.hypothesis);
    if (const auto* w = std::get_if<DegenerationWitness>(&c.witness)) {
      jc["witness"] = {{"p", w->p}, {"e", w->e}, {"gamma", w->gamma}};
    } else if (const auto* t = std::get_if<ThresholdWitness>(&c.witness)) {
      jc["witness"] = {{"p", t->p}, {"g", t->g}, {"r", t->r}, {"e", t->e}};
    } else if (const auto* p = std::get_if<ClosedFormParams>(&c.witness)) {
      jc["witness"] = {{"iota", p->iota},
                       {"theta", format_decimal_floor(p->theta, 6)}};
    }
    if (c.conditional()) jc["conditional_note"] = c.conditional_note;
    certs.push_back(std::move(jc));
  }
  j["certificates"] = std::move(certs);
  j["best_lower"] = rep.best_lower;
  j["best_kind"] = cert_kind_name(rep.best_kind);
  j["upper_genus"] = rep.upper_genus;
  j["upper_gonality"] = rep.upper_gonality;
  return j;
}

std::string table_human(const std::vector<sweep::TableRow>& rows) {
  std::ostringstream os;
  os << "fib.gen >=   p    d ~ (asymptotic)   exact threshold\n";
  for (const auto& r : rows) {
    std::ostringstream asym, exact;
    asym << r.asymptotic_num << "n/" << r.asymptotic_den;
    exact << r.threshold_prime << "*ceil((n+" << r.threshold_offset << ")/"
          << (r.threshold_prime + 1) << ")";
    os << std::right << std::setw(10) << r.guaranteed_fibgen << std::setw(4)
       << r.prime << "    " << std::left << std::setw(19) << asym.str()
       << exact.str() << "\n";
  }
  return os.str();
}

static std::string threshold_formula(const sweep::TableRow& r) {
  std::ostringstream os;
  os << r.threshold_prime << "*ceil((n+" << r.threshold_offset << ")/"
     << (r.threshold_prime + 1) << ")";
  return os.str();
}

std::string table_csv(const std::vector<sweep::TableRow>& rows) {
  std::string out = "fibgen_ge,prime,asymptotic_ratio,exact_threshold\n";
  for (const auto& r : rows) {
    out += std::to_string(r.guaranteed_fibgen) + "," + std::to_string(r.prime) +
           "," + std::to_string(r.asymptotic_num) + "/" +
           std::to_string(r.asymptotic_den) + "," + threshold_formula(r) + "\n";
  }
  return out;
}

json table_json(const std::vector<sweep::TableRow>& rows) {
  json j;
  json arr = json::array();
  for (const auto& r : rows) {
    arr.push_back({{"fibgen_ge", r.guaranteed_fibgen},
                   {"prime", r.prime},
                   {"asymptotic_ratio", std::to_string(r.asymptotic_num) + "/" +
                                            std::to_string(r.asymptotic_den)},
                   {"exact_threshold", threshold_formula(r)}});
  }
  j["rows"] = std::move(arr);
  return j;
}

std::string grid_csv(const std::vector<sweep::GridCell>& cells) {
  std::string out = "n,d,best_lower,best_kind,upper_genus,closed_form\n";
  for (const auto& c : cells) {
    out += std::to_string(c.n) + "," + std::to_string(c.d) + "," +
           std::to_string(c.best_lower) + "," + cert_kind_name(c.best_kind) +
           "," + std::to_string(c.upper_genus) + "," +
           format_decimal_floor(c.closed_form, 6) + "\n";
  }
  return out;
}

json grid_json(const sweep::GridRect& rect,
               const std::vector<sweep::GridCell>& cells) {
  json j;
  j["n_min"] = rect.n_min;
  j["n_max"] = rect.n_max;
  j["d_min"] = rect.d_min;
  j["d_max"] = rect.d_max;
  json arr = json::array();
  for (const auto& c : cells) {
    arr.push_back({{"n", c.n},
                   {"d", c.d},
                   {"best_lower", c.best_lower},
                   {"best_kind", cert_kind_name(c.best_kind)},
                   {"upper_genus", c.upper_genus},
                   {"closed_form",
                    std::stod(format_decimal_floor(c.closed_form, 6))}});
  }
  j["cells"] = std::move(arr);
  return j;
}

std::string grid_svg(const sweep::GridRect& rect,
                     const std::vector<sweep::GridCell>& cells) {
  constexpr std::int64_t cell = 6;
  const std::int64_t cols = rect.n_max - rect.n_min + 1;
  const std::int64_t rows = rect.d_max - rect.d_min + 1;
  const std::int64_t x0 = 56, y0 = 34;
  const std::int64_t pw = cols * cell, ph = rows * cell;
  const std::int64_t legend_x = x0 + pw + 18;
  const std::int64_t width = legend_x + 100;
  const std::int64_t height = std::max(y0 + ph + 44, y0 + 13 * 14 + 30);

  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
     << "\" height=\"" << height << "\" viewBox=\"0 0 " << width << " "
     << height << "\">\n";
  os << "<style>text { font-family: monospace; font-size: 10px; fill: #222; "
        "}</style>\n";
  os << "<text x=\"" << x0 << "\" y=\"16\">best proven lower bound on the "
        "fibering genus of X_(n,d)</text>\n";

  for (const auto& c : cells) {
    const std::int64_t bucket =
        std::clamp<std::int64_t>(c.best_lower, 0, 12);
    const std::int64_t x = x0 + (c.n - rect.n_min) * cell;
    const std::int64_t y = y0 + (rect.d_max - c.d) * cell;
    os << "<rect class=\"cell\" x=\"" << x << "\" y=\"" << y << "\" width=\""
       << cell << "\" height=\"" << cell << "\" fill=\"" << kPalette[bucket]
       << "\"/>\n";
  }

  os << "<rect x=\"" << x0 << "\" y=\"" << y0 << "\" width=\"" << pw
     << "\" height=\"" << ph << "\" fill=\"none\" stroke=\"#333\"/>\n";

  const std::int64_t n_step = nice_step(cols);
  for (std::int64_t v = ((rect.n_min + n_step - 1) / n_step) * n_step;
       v <= rect.n_max; v += n_step) {
    const std::int64_t x = x0 + (v - rect.n_min) * cell + cell / 2;
    os << "<line x1=\"" << x << "\" y1=\"" << y0 + ph << "\" x2=\"" << x
       << "\" y2=\"" << y0 + ph + 4 << "\" stroke=\"#333\"/>\n";
    os << "<text x=\"" << x << "\" y=\"" << y0 + ph + 16
       << "\" text-anchor=\"middle\">" << v << "</text>\n";
  }
  const std::int64_t d_step = nice_step(rows);
  for (std::int64_t v = ((rect.d_min + d_step - 1) / d_step) * d_step;
       v <= rect.d_max; v += d_step) {
    const std::int64_t y = y0 + (rect.d_max - v) * cell + cell / 2;
    os << "<line x1=\"" << x0 - 4 << "\" y1=\"" << y << "\" x2=\"" << x0
       << "\" y2=\"" << y << "\" stroke=\"#333\"/>\n";
    os << "<text x=\"" << x0 - 6 << "\" y=\"" << y + 3
       << "\" text-anchor=\"end\">" << v << "</text>\n";
  }
  os << "<text x=\"" << x0 + pw / 2 << "\" y=\"" << y0 + ph + 32
     << "\" text-anchor=\"middle\">n</text>\n";
  os << "<text x=\"14\" y=\"" << y0 + ph / 2 << "\" text-anchor=\"middle\" "
     << "transform=\"rotate(-90 14 " << y0 + ph / 2 << ")\">d</text>\n";

  os << "<text x=\"" << legend_x << "\" y=\"" << y0 - 4
     << "\">lower bound</text>\n";
  for (int i = 0; i < 13; ++i) {
    const std::int64_t y = y0 + i * 14;
    os << "<rect class=\"swatch\" x=\"" << legend_x << "\" y=\"" << y
       << "\" width=\"12\" height=\"12\" fill=\"" << kPalette[i]
       << "\" stroke=\"#333\"/>\n";
    os << "<text x=\"" << legend_x + 18 << "\" y=\"" << y + 10 << "\">"
       << (i == 12 ? std::string("12+") : std::to_string(i)) << "</text>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace fibgen::render
