#include "kreg/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "kreg/special.hpp"

namespace kreg {

namespace {

constexpr double kMassTol = 1e-8;
constexpr double kCdfEndpointTol = 1e-10;
constexpr int kCdfTablePanels = 512;

// Mass of the density over its support, by adaptive quadrature.
double density_mass(const Kernel::Fn& pdf, const Interval& s) {
    auto f = [&pdf](double u) { return pdf(u); };
    if (s.is_finite()) return integrate(f, s.lo, s.hi, 1e-10);
    if (s.lo_finite()) return integrate_right_tail(f, s.lo, 1e-10);
    if (s.hi_finite()) return integrate_left_tail(f, s.hi, 1e-10);
    return integrate_line(f, 1e-10);
}

// A very negative / very positive probe for cdf limits on infinite supports.
double lo_probe(const Interval& s) { return s.lo_finite() ? s.lo : -1e12; }
double hi_probe(const Interval& s) { return s.hi_finite() ? s.hi : 1e12; }

void validate_cdf(const Kernel::Fn& cdf, const Interval& s, const std::string& name) {
    double at_lo = cdf(lo_probe(s));
    double at_hi = cdf(hi_probe(s));
    if (std::abs(at_lo) > kCdfEndpointTol || std::abs(at_hi - 1.0) > kCdfEndpointTol)
        throw ConfigError("kernel '" + name + "': cdf endpoints are not 0 and 1");
    // Nondecreasing spot check over the (possibly clipped) support.
    double a = std::max(s.lo, -64.0), b = std::min(s.hi, 64.0);
    double prev = cdf(a);
    for (int i = 1; i <= 128; ++i) {
        double u = a + (b - a) * i / 128.0;
        double cur = cdf(u);
        if (cur < prev - 1e-14)
            throw ConfigError("kernel '" + name + "': cdf is not nondecreasing");
        prev = cur;
    }
}

std::shared_ptr<const detail::CdfTable> build_cdf_table(const Kernel::Fn& pdf,
                                                        const Interval& s) {
    auto table = std::make_shared<detail::CdfTable>();
    table->lo = s.lo;
    table->panel_width = (s.hi - s.lo) / kCdfTablePanels;
    table->prefix.resize(kCdfTablePanels + 1);
    table->prefix[0] = 0.0;
    auto f = [&pdf](double u) { return pdf(u); };
    for (int i = 0; i < kCdfTablePanels; ++i) {
        double a = s.lo + i * table->panel_width;
        table->prefix[i + 1] = table->prefix[i] + integrate(f, a, a + table->panel_width, 1e-13);
    }
    return table;
}

} // namespace

Kernel::Kernel(std::string name, Fn pdf, Fn cdf, Interval support)
    : name_(std::move(name)), pdf_(std::move(pdf)), cdf_(std::move(cdf)), support_(support) {
    if (!pdf_) throw ConfigError("kernel '" + name_ + "': pdf is required");
    if (!(support_.lo < support_.hi))
        throw ConfigError("kernel '" + name_ + "': empty support interval");
    double mass = density_mass(pdf_, support_);
    if (std::abs(mass - 1.0) > kMassTol)
        throw ConfigError("kernel '" + name_ + "': density mass " + std::to_string(mass) +
                          " is not 1 within 1e-8");
    if (cdf_) validate_cdf(cdf_, support_, name_);
    if (!cdf_ && support_.is_finite()) table_ = build_cdf_table(pdf_, support_);
}

double Kernel::cdf_by_quadrature(double x, double tol) const {
    if (!(tol > 0.0)) throw ConfigError("kernel_cdf tolerance must be positive");
    if (std::isnan(x)) throw ConfigError("kernel_cdf at NaN");
    if (x <= support_.lo) return 0.0;
    double upper = std::min(x, support_.hi);
    auto f = [this](double u) { return pdf_(u); };
    double v;
    if (support_.lo_finite()) {
        // The prefix table shares panel sums between queries; the residual
        // piece never spans more than one panel. Fall back to a single full
        // integration when the caller asks for more accuracy than the table
        // was built with.
        if (table_ && tol >= 1e-10) {
            const auto& t = *table_;
            auto idx = static_cast<std::size_t>((upper - t.lo) / t.panel_width);
            idx = std::min(idx, t.prefix.size() - 1);
            double anchor = t.lo + idx * t.panel_width;
            v = t.prefix[idx];
            if (upper > anchor) v += integrate(f, anchor, upper, 1e-13);
        } else {
            v = integrate(f, support_.lo, upper, tol);
        }
    } else {
        v = integrate_left_tail(f, upper, tol);
    }
    return std::clamp(v, 0.0, 1.0);
}

ScaledKernel::ScaledKernel(Kernel mother, double h) : mother_(std::move(mother)), h_(h) {
    if (!(h > 0.0)) throw ConfigError("bandwidth must be positive");
}

Interval ScaledKernel::support() const {
    return {mother_.support().lo * h_, mother_.support().hi * h_};
}

ScaledKernel scale(const Kernel& k, double h) { return ScaledKernel(k, h); }

double kernel_cdf(const Kernel& k, double x, double tol) {
    if (!(tol > 0.0)) throw ConfigError("kernel_cdf tolerance must be positive");
    if (k.has_cdf()) return std::clamp(k.cdf(x), 0.0, 1.0);
    return k.cdf_by_quadrature(x, tol);
}

double kernel_cdf(const ScaledKernel& k, double x, double tol) {
    // F_h(x) = F(x / h); the substitution preserves absolute cdf error.
    return kernel_cdf(k.mother(), x / k.bandwidth(), tol);
}

Kernel make_gaussian() {
    return Kernel("gaussian", [](double u) { return normal_pdf(u); },
                  [](double u) { return normal_cdf(u); },
                  {-std::numeric_limits<double>::infinity(),
                   std::numeric_limits<double>::infinity()});
}

Kernel make_rectangular() {
    // Open-interval convention: the endpoints themselves evaluate to 0.
    auto pdf = [](double u) { return (u > -0.5 && u < 0.5) ? 1.0 : 0.0; };
    auto cdf = [](double u) { return std::clamp(u + 0.5, 0.0, 1.0); };
    return Kernel("rectangular", pdf, cdf, {-0.5, 0.5});
}

Kernel make_bump() {
    auto shape = [](double u) {
        return std::abs(u) < 1.0 ? std::exp(-1.0 / (1.0 - u * u)) : 0.0;
    };
    double b = 1.0 / integrate(shape, -1.0, 1.0, 1e-12);
    auto pdf = [shape, b](double u) { return b * shape(u); };
    // No closed-form cdf; kernel_cdf uses the quadrature route.
    return Kernel("bump", pdf, nullptr, {-1.0, 1.0});
}

Kernel make_exp_power(double p) {
    if (!(p >= 1.0)) throw ConfigError("exp_power kernel requires p >= 1");
    auto shape = [p](double u) { return std::exp(-std::pow(std::abs(u), p)); };
    double c_p = 1.0 / integrate_line(shape, 1e-12);
    auto pdf = [shape, c_p](double u) { return c_p * shape(u); };
    // F(u) = (1 + sgn(u) P(1/p, |u|^p)) / 2 via the incomplete gamma function.
    auto cdf = [p](double u) {
        double t = regularized_lower_gamma(1.0 / p, std::pow(std::abs(u), p));
        return u < 0.0 ? 0.5 * (1.0 - t) : 0.5 * (1.0 + t);
    };
    std::ostringstream name;
    name << "exp_power:p=" << p;
    return Kernel(name.str(), pdf, cdf,
                  {-std::numeric_limits<double>::infinity(),
                   std::numeric_limits<double>::infinity()});
}

Kernel make_gaussian_mixture(double mu1, double mu2, double w) {
    if (!(w > 0.0 && w < 1.0)) throw ConfigError("gauss_mix weight must lie in (0,1)");
    if (mu1 == mu2) throw ConfigError("gauss_mix requires distinct component means");
    auto pdf = [mu1, mu2, w](double u) {
        return w * normal_pdf(u - mu1) + (1.0 - w) * normal_pdf(u - mu2);
    };
    auto cdf = [mu1, mu2, w](double u) {
        return w * normal_cdf(u - mu1) + (1.0 - w) * normal_cdf(u - mu2);
    };
    std::ostringstream name;
    name << "gauss_mix:mu1=" << mu1 << ",mu2=" << mu2 << ",w=" << w;
    return Kernel(name.str(), pdf, cdf,
                  {-std::numeric_limits<double>::infinity(),
                   std::numeric_limits<double>::infinity()});
}

namespace {

// Parses "key=value" pairs separated by commas, in declared order.
std::vector<double> parse_params(const std::string& body, const std::vector<std::string>& keys,
                                 const std::string& spec) {
    std::vector<double> out;
    std::size_t pos = 0;
    for (std::size_t i = 0; i < keys.size(); ++i) {
        std::size_t end = body.find(',', pos);
        std::string field = body.substr(pos, end == std::string::npos ? std::string::npos
                                                                      : end - pos);
        std::string prefix = keys[i] + "=";
        if (field.rfind(prefix, 0) != 0)
            throw ParseError("bad kernel spec '" + spec + "': expected " + prefix + "<value>");
        try {
            std::size_t used = 0;
            double v = std::stod(field.substr(prefix.size()), &used);
            if (used != field.size() - prefix.size())
                throw std::invalid_argument("trailing characters");
            out.push_back(v);
        } catch (const std::exception&) {
            throw ParseError("bad kernel spec '" + spec + "': cannot parse '" + field + "'");
        }
        if (end == std::string::npos) {
            if (i + 1 != keys.size())
                throw ParseError("bad kernel spec '" + spec + "': missing parameters");
            pos = body.size();
        } else {
            pos = end + 1;
        }
    }
    if (pos != body.size())
        throw ParseError("bad kernel spec '" + spec + "': unexpected trailing parameters");
    return out;
}

} // namespace

Kernel kernel_by_name(const std::string& spec) {
    if (spec == "gaussian") return make_gaussian();
    if (spec == "rectangular") return make_rectangular();
    if (spec == "bump") return make_bump();
    if (spec.rfind("exp_power:", 0) == 0) {
        auto p = parse_params(spec.substr(10), {"p"}, spec);
        return make_exp_power(p[0]);
    }
    if (spec.rfind("gauss_mix:", 0) == 0) {
        auto p = parse_params(spec.substr(10), {"mu1", "mu2", "w"}, spec);
        return make_gaussian_mixture(p[0], p[1], p[2]);
    }
    throw ParseError("unknown kernel '" + spec + "'");
}

} // namespace kreg
