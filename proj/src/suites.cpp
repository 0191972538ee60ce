#include "logbloch/suites.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <functional>
#include <limits>
#include <random>
#include <set>
#include <stdexcept>

#include "logbloch/accumulate.hpp"
#include "logbloch/criteria.hpp"
#include "logbloch/families.hpp"
#include "logbloch/frame.hpp"
#include "logbloch/operators.hpp"
#include "logbloch/parallel.hpp"
#include "logbloch/quadrature.hpp"

namespace logbloch {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double now_seconds() {
    return std::chrono::duration<double>(std::chrono::steady_clock::now().time_since_epoch())
        .count();
}

int frame_order_for_degree(long degree) {
    int n = 0;
    while (((1L << n) - 1) < degree) ++n;
    return n;
}

bool is_pow2_minus_one(long degree) {
    if (degree < 1) return false;
    const unsigned long v = static_cast<unsigned long>(degree) + 1ul;
    return (v & (v - 1ul)) == 0ul;
}

double uniform01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

struct Stats {
    double min = 0.0;
    double med = 0.0;
    double max = 0.0;
    bool ok = false;
};

Stats stats_of(std::vector<double> v) {
    Stats s;
    if (v.empty()) return s;
    for (const double x : v) {
        if (!std::isfinite(x)) return s;
    }
    std::sort(v.begin(), v.end());
    s.min = v.front();
    s.max = v.back();
    const std::size_t n = v.size();
    s.med = (n % 2) ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
    s.ok = true;
    return s;
}

std::string join_notes(const std::string& a, const std::string& b) {
    if (a.empty()) return b;
    if (b.empty()) return a;
    return a + "; " + b;
}

/// Pass rule: ratios positive and finite, and the band width max/min must not
/// inflate by more than `inflation` between consecutive degree rows.
EquivalenceReport finish_band_report(std::string tag, double alpha, std::vector<RatioRow> rows,
                                     double inflation, const std::string& diag) {
    EquivalenceReport rep;
    rep.theorem_tag = std::move(tag);
    rep.alpha = alpha;
    rep.rows = std::move(rows);
    bool ok = !rep.rows.empty() && diag.empty();
    double prev_width = 0.0;
    std::string widths = "band widths:";
    for (std::size_t i = 0; i < rep.rows.size(); ++i) {
        const RatioRow& r = rep.rows[i];
        if (!(r.ratio_min > 0.0) || !std::isfinite(r.ratio_max)) {
            ok = false;
            break;
        }
        const double w = r.ratio_max / r.ratio_min;
        widths += " " + format_real(w);
        if (i > 0 && w > inflation * prev_width * (1.0 + 1e-12)) ok = false;
        prev_width = w;
    }
    rep.pass = ok;
    rep.notes = join_notes(diag, widths);
    return rep;
}

/// Pass rule: every row has lo <= ratio_min and ratio_max <= hi.
EquivalenceReport finish_range_report(std::string tag, double alpha, std::vector<RatioRow> rows,
                                      double lo, double hi, const std::string& diag,
                                      const std::string& note) {
    EquivalenceReport rep;
    rep.theorem_tag = std::move(tag);
    rep.alpha = alpha;
    rep.rows = std::move(rows);
    bool ok = !rep.rows.empty() && diag.empty();
    for (const RatioRow& r : rep.rows) {
        if (!std::isfinite(r.ratio_min) || !std::isfinite(r.ratio_max)) ok = false;
        if (!(r.ratio_min >= lo) || !(r.ratio_max <= hi)) ok = false;
    }
    rep.pass = ok;
    rep.notes = join_notes(diag, note);
    return rep;
}

/// Pass rule: the overall max/min across every row stays below `bound`.
EquivalenceReport finish_spread_report(std::string tag, double alpha, std::vector<RatioRow> rows,
                                       double bound, const std::string& diag,
                                       const std::string& note) {
    EquivalenceReport rep;
    rep.theorem_tag = std::move(tag);
    rep.alpha = alpha;
    rep.rows = std::move(rows);
    double lo = kInf;
    double hi = 0.0;
    bool finite = !rep.rows.empty();
    for (const RatioRow& r : rep.rows) {
        if (!std::isfinite(r.ratio_min) || !std::isfinite(r.ratio_max) || r.ratio_min <= 0.0) {
            finite = false;
            break;
        }
        lo = std::min(lo, r.ratio_min);
        hi = std::max(hi, r.ratio_max);
    }
    const double spread = finite ? hi / lo : kInf;
    rep.pass = finite && diag.empty() && spread <= bound;
    rep.notes = join_notes(diag, join_notes(note, "spread=" + format_real(spread)));
    return rep;
}

// ---- feature tables ------------------------------------------------------

struct MemberScalars {
    std::map<std::string, double> v;
    std::string error;

    double get(const std::string& key) const {
        const auto it = v.find(key);
        if (it == v.end()) throw std::logic_error("missing feature " + key);
        return it->second;
    }
};

struct PhasesMember {
    MemberScalars s;
    std::vector<double> h1b, h2b, hinfb;
    std::vector<double> h1db, h2db, hinfdb;
    std::vector<double> h1rb, h2rb, hinfrb;
    CoefficientSeries f;
};

struct DegreeTable {
    long degree = 0;
    int frame_order = 0;
    std::shared_ptr<const Frame> frame;
    std::vector<MemberScalars> dec;
    std::vector<PhasesMember> ph;
};

const std::vector<double> kSAlphas = {-1.0, -0.5, 0.0, 1.0, 2.0};
const std::vector<double> kKAlphas = {-0.5, 0.0, 1.0};
const std::vector<double> kDecAreaF = {-1.0, -0.5, 0.0, 0.5, 1.0, 2.0};
const std::vector<double> kDecAreaL = {-1.0, -0.5, 0.0, 1.0};
const std::vector<double> kPhAreaF = {-1.0, 0.0, 1.0, 2.0};
const std::vector<double> kPhSupF = {-1.0, -0.5, 0.0, 1.0, 2.0};
const std::vector<double> kPhSupC = {0.5, 1.0, 2.0};
const std::vector<double> kRadii = {0.5, 0.9, 0.99};

std::string akey(const char* prefix, double alpha) {
    return std::string(prefix) + format_real(alpha);
}

MemberScalars dec_features(const CoefficientSeries& f) {
    MemberScalars out;
    std::vector<double> a;
    a.reserve(f.size());
    for (int n = 0; n <= f.degree(); ++n) a.push_back(f.coeff(n).real());
    for (const double al : kSAlphas) out.v[akey("s@", al)] = s_alpha(a, al);
    for (const double al : kKAlphas) out.v[akey("k@", al)] = k_alpha(f, al);
    out.v["kloglog"] = k_loglog(f);

    const AreaNormEvaluator area_f(f);
    for (const double al : kDecAreaF) {
        out.v[akey("areaf@", al)] = area_f.norm(WeightSpec::log_alpha(al)).value;
    }
    out.v["areaf@loglog"] = area_f.norm(WeightSpec::loglog()).value;

    const AreaNormEvaluator area_l(libera_coeff(f));
    for (const double al : kDecAreaL) {
        out.v[akey("areaL@", al)] = area_l.norm(WeightSpec::log_alpha(al)).value;
    }
    out.v["areaL@loglog"] = area_l.norm(WeightSpec::loglog()).value;
    out.v["areaL@pow2"] =
        area_l.norm(WeightSpec::normal([](double x) { return x * x; }, 2.0, 2.0)).value;

    for (const double r : kRadii) out.v[akey("hardygap@", r)] = hardy_inequality_gap(f, r);
    return out;
}

std::vector<double> block_norms(const CoefficientSeries& g, const Frame& frame, double p) {
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(frame.n_max()) + 1);
    for (int n = 0; n <= frame.n_max(); ++n) {
        out.push_back(hardy_norm(hadamard(frame.vn(n), g), p));
    }
    return out;
}

PhasesMember ph_features(CoefficientSeries f, const Frame& frame) {
    PhasesMember m;
    const AreaNormEvaluator area_f(f);
    for (const double al : kPhAreaF) {
        m.s.v[akey("areaf@", al)] = area_f.norm(WeightSpec::log_alpha(al)).value;
    }
    m.s.v["areaf@loglog"] = area_f.norm(WeightSpec::loglog()).value;

    const SupNormEvaluator sup_f(f);
    for (const double al : kPhSupF) {
        m.s.v[akey("supf@", al)] = sup_f.norm(WeightSpec::log_alpha(al)).value;
    }
    m.s.v["supf@loglog"] = sup_f.norm(WeightSpec::loglog()).value;

    const SupNormEvaluator sup_c(cesaro(f));
    for (const double al : kPhSupC) {
        m.s.v[akey("supC@", al)] = sup_c.norm(WeightSpec::log_alpha(al)).value;
    }
    m.s.v["supC@loglog"] = sup_c.norm(WeightSpec::loglog()).value;

    m.s.v["ell1"] = ell1_minus1_norm(f);
    m.s.v["hf@1"] = hardy_norm(f, 1.0);
    m.s.v["hf@2"] = hardy_norm(f, 2.0);
    m.s.v["hf@inf"] = hardy_norm(f, kInf);

    const CoefficientSeries fd = derivative(f);
    const CoefficientSeries fr = r_operator(f);
    m.h1b = block_norms(f, frame, 1.0);
    m.h2b = block_norms(f, frame, 2.0);
    m.hinfb = block_norms(f, frame, kInf);
    m.h1db = block_norms(fd, frame, 1.0);
    m.h2db = block_norms(fd, frame, 2.0);
    m.hinfdb = block_norms(fd, frame, kInf);
    m.h1rb = block_norms(fr, frame, 1.0);
    m.h2rb = block_norms(fr, frame, 2.0);
    m.hinfrb = block_norms(fr, frame, kInf);
    m.f = std::move(f);
    return m;
}

std::vector<long> checked_degrees(const SuiteConfig& cfg) {
    std::vector<long> degrees = cfg.degrees;
    std::sort(degrees.begin(), degrees.end());
    degrees.erase(std::unique(degrees.begin(), degrees.end()), degrees.end());
    if (degrees.empty()) throw std::runtime_error("degree sweep must not be empty");
    for (const long d : degrees) {
        if (!is_pow2_minus_one(d)) {
            throw std::runtime_error("degree sweep entries must be powers of two minus one, got " +
                                     std::to_string(d));
        }
    }
    return degrees;
}

std::vector<DegreeTable> build_tables(const SuiteConfig& cfg, SuiteTimings* tm) {
    std::vector<DegreeTable> tables;
    for (const long d : checked_degrees(cfg)) {
        DegreeTable t;
        t.degree = d;
        t.frame_order = frame_order_for_degree(d);
        t.frame = std::make_shared<Frame>(t.frame_order);
        tables.push_back(std::move(t));
    }
    if (cfg.count <= 0) return tables;

    struct Slot {
        int table;
        int index;
    };
    std::vector<Slot> slots;
    for (int ti = 0; ti < static_cast<int>(tables.size()); ++ti) {
        tables[static_cast<std::size_t>(ti)].dec.resize(static_cast<std::size_t>(cfg.count));
        tables[static_cast<std::size_t>(ti)].ph.resize(static_cast<std::size_t>(cfg.count));
        for (int j = 0; j < cfg.count; ++j) slots.push_back({ti, j});
    }

    double t0 = now_seconds();
    parallel_for(static_cast<int>(slots.size()), cfg.threads, [&](int k) {
        const Slot slot = slots[static_cast<std::size_t>(k)];
        DegreeTable& t = tables[static_cast<std::size_t>(slot.table)];
        TestFamilySpec sp;
        sp.kind = FamilyKind::random_decreasing;
        sp.degree = static_cast<int>(t.degree);
        sp.count = cfg.count;
        sp.seed = cfg.seed;
        MemberScalars& out = t.dec[static_cast<std::size_t>(slot.index)];
        try {
            out = dec_features(family_member(sp, slot.index));
        } catch (const std::exception& e) {
            out.error = e.what();
        }
    });
    if (tm) tm->decreasing_stage_seconds = now_seconds() - t0;

    t0 = now_seconds();
    parallel_for(static_cast<int>(slots.size()), cfg.threads, [&](int k) {
        const Slot slot = slots[static_cast<std::size_t>(k)];
        DegreeTable& t = tables[static_cast<std::size_t>(slot.table)];
        TestFamilySpec sp;
        sp.kind = FamilyKind::random_phases;
        sp.degree = static_cast<int>(t.degree);
        sp.count = cfg.count;
        sp.seed = cfg.seed;
        PhasesMember& out = t.ph[static_cast<std::size_t>(slot.index)];
        try {
            out = ph_features(family_member(sp, slot.index), *t.frame);
        } catch (const std::exception& e) {
            out.s.error = e.what();
        }
    });
    if (tm) tm->phases_stage_seconds = now_seconds() - t0;
    return tables;
}

// ---- aggregation helpers -------------------------------------------------

using DecRatioFn = std::function<double(const MemberScalars&)>;
using PhRatioFn = std::function<double(const PhasesMember&)>;

EquivalenceReport dec_band_suite(const std::string& tag, double alpha,
                                 const std::vector<DegreeTable>& tables, double inflation,
                                 const DecRatioFn& fn) {
    std::vector<RatioRow> rows;
    std::string diag;
    for (const DegreeTable& t : tables) {
        std::vector<double> rr;
        for (const MemberScalars& m : t.dec) {
            if (!m.error.empty()) {
                if (diag.empty()) diag = "member aborted: " + m.error;
                continue;
            }
            rr.push_back(fn(m));
        }
        const Stats st = stats_of(std::move(rr));
        if (!st.ok) {
            if (diag.empty()) diag = "non-finite ratios at degree " + std::to_string(t.degree);
            continue;
        }
        rows.push_back(RatioRow{t.degree, st.min, st.med, st.max});
    }
    return finish_band_report(tag, alpha, std::move(rows), inflation, diag);
}

EquivalenceReport ph_band_suite(const std::string& tag, double alpha,
                                const std::vector<DegreeTable>& tables, double inflation,
                                const PhRatioFn& fn) {
    std::vector<RatioRow> rows;
    std::string diag;
    for (const DegreeTable& t : tables) {
        std::vector<double> rr;
        for (const PhasesMember& m : t.ph) {
            if (!m.s.error.empty()) {
                if (diag.empty()) diag = "member aborted: " + m.s.error;
                continue;
            }
            rr.push_back(fn(m));
        }
        const Stats st = stats_of(std::move(rr));
        if (!st.ok) {
            if (diag.empty()) diag = "non-finite ratios at degree " + std::to_string(t.degree);
            continue;
        }
        rows.push_back(RatioRow{t.degree, st.min, st.med, st.max});
    }
    return finish_band_report(tag, alpha, std::move(rows), inflation, diag);
}

double frame_b1_from(const std::vector<double>& h1b, double alpha) {
    KahanSum s;
    for (std::size_t n = 0; n < h1b.size(); ++n) {
        s.add(std::pow(static_cast<double>(n) + 1.0, alpha) * h1b[n]);
    }
    return s.value();
}

double frame_bloch_from(const std::vector<double>& hinfb, double alpha) {
    double best = 0.0;
    for (std::size_t n = 0; n < hinfb.size(); ++n) {
        best = std::max(best, std::pow(static_cast<double>(n) + 1.0, -alpha) * hinfb[n]);
    }
    return best;
}

double frame_loglog_b1_from(const std::vector<double>& h1b) {
    KahanSum s;
    for (std::size_t n = 0; n < h1b.size(); ++n) {
        s.add(std::log(static_cast<double>(n) + 2.0) * h1b[n]);
    }
    return s.value();
}

double frame_loglog_bloch_from(const std::vector<double>& hinfb) {
    double best = 0.0;
    for (std::size_t n = 0; n < hinfb.size(); ++n) {
        best = std::max(best, hinfb[n] / std::log(static_cast<double>(n) + 2.0));
    }
    return best;
}

struct BlockSelector {
    const char* suffix;
    double p;
    std::vector<double> PhasesMember::*b;
    std::vector<double> PhasesMember::*db;
    std::vector<double> PhasesMember::*rb;
    const char* hardy_key;
};

const BlockSelector kBlockSelectors[] = {
    {"p1", 1.0, &PhasesMember::h1b, &PhasesMember::h1db, &PhasesMember::h1rb, "hf@1"},
    {"p2", 2.0, &PhasesMember::h2b, &PhasesMember::h2db, &PhasesMember::h2rb, "hf@2"},
    {"pinf", kInf, &PhasesMember::hinfb, &PhasesMember::hinfdb, &PhasesMember::hinfrb, "hf@inf"},
};

// ---- equivalence suite ----------------------------------------------------

std::vector<EquivalenceReport> equivalence_core(const SuiteConfig& cfg,
                                                const std::vector<DegreeTable>& tables) {
    std::vector<EquivalenceReport> reps;
    if (cfg.count <= 0) return reps;
    const double infl = cfg.band_inflation;

    for (const double al : kSAlphas) {
        reps.push_back(dec_band_suite("decreasing_coeff_band", al, tables, infl,
                                      [al](const MemberScalars& m) {
                                          return m.get(akey("s@", al)) / m.get(akey("areaf@", al));
                                      }));
    }

    for (const double al : kKAlphas) {
        reps.push_back(dec_band_suite("libera_coeff_band", al, tables, infl,
                                      [al](const MemberScalars& m) {
                                          return m.get(akey("k@", al)) / m.get(akey("areaL@", al));
                                      }));
    }

    reps.push_back(dec_band_suite("libera_coeff_loglog", -1.0, tables, infl,
                                  [](const MemberScalars& m) {
                                      return m.get("kloglog") / m.get("areaL@loglog");
                                  }));

    for (const double al : kPhAreaF) {
        reps.push_back(ph_band_suite("frame_norm_area_equiv", al, tables, infl,
                                     [al](const PhasesMember& m) {
                                         return frame_b1_from(m.h1b, al) /
                                                m.s.get(akey("areaf@", al));
                                     }));
    }

    for (const double al : kPhAreaF) {
        reps.push_back(ph_band_suite("frame_norm_bloch_equiv", al, tables, infl,
                                     [al](const PhasesMember& m) {
                                         return frame_bloch_from(m.hinfb, al) /
                                                m.s.get(akey("supf@", al));
                                     }));
    }

    reps.push_back(ph_band_suite("frame_norm_loglog_area", -1.0, tables, infl,
                                 [](const PhasesMember& m) {
                                     return frame_loglog_b1_from(m.h1b) / m.s.get("areaf@loglog");
                                 }));
    reps.push_back(ph_band_suite("frame_norm_loglog_bloch", -1.0, tables, infl,
                                 [](const PhasesMember& m) {
                                     return frame_loglog_bloch_from(m.hinfb) /
                                            m.s.get("supf@loglog");
                                 }));

    // Block profiles of a summable-decay series collapse toward zero while a
    // dyadic-gap series keeps unit-size blocks at every scale.
    {
        std::vector<RatioRow> decay_rows;
        std::vector<RatioRow> lac_rows;
        for (const DegreeTable& t : tables) {
            std::vector<double> a(static_cast<std::size_t>(t.degree) + 1);
            for (std::size_t n = 0; n < a.size(); ++n) {
                const double dn = static_cast<double>(n);
                a[n] = 1.0 / ((dn + 1.0) * std::pow(std::log(dn + 2.0), 2.0));
            }
            std::vector<Complex> lac(static_cast<std::size_t>(t.degree) + 1);
            for (long k = 1; k <= t.degree; k *= 2) lac[static_cast<std::size_t>(k)] = 1.0;

            const std::vector<double> prof_decay =
                little_bloch_profile(CoefficientSeries::from_real(a), 0.0, *t.frame);
            const std::vector<double> prof_lac =
                little_bloch_profile(CoefficientSeries(std::move(lac)), 0.0, *t.frame);
            // The final block is clipped by truncation; judge the last full one.
            const auto tail_over_peak = [](const std::vector<double>& prof) {
                const std::size_t last = prof.size() - 2;
                double peak = 0.0;
                for (std::size_t n = 0; n <= last; ++n) peak = std::max(peak, prof[n]);
                return prof[last] / peak;
            };
            const double rd = tail_over_peak(prof_decay);
            const double rl = tail_over_peak(prof_lac);
            decay_rows.push_back(RatioRow{t.degree, rd, rd, rd});
            lac_rows.push_back(RatioRow{t.degree, rl, rl, rl});
        }
        reps.push_back(finish_range_report("little_bloch_profile_decay", 0.0,
                                           std::move(decay_rows), 1e-300, 0.25, "",
                                           "last full block over peak; small means vanishing "
                                           "block profile"));
        reps.push_back(finish_range_report("little_bloch_profile_lacunary", 0.0,
                                           std::move(lac_rows), 0.5, kInf, "",
                                           "dyadic-gap series keeps full-size blocks"));
    }

    {
        const Frame growth_frame(13);
        for (const BlockSelector& sel : kBlockSelectors) {
            std::vector<RatioRow> rows;
            for (int n = 1; n <= 12; ++n) {
                const double norm = hardy_norm(growth_frame.vn(n), sel.p);
                const double target = std::pow(2.0, n * (1.0 - 1.0 / sel.p));
                const double ratio = norm / target;
                rows.push_back(RatioRow{(1L << (n + 1)) - 1, ratio, ratio, ratio});
            }
            reps.push_back(finish_spread_report(std::string("block_norm_growth_") + sel.suffix,
                                                0.0, std::move(rows), 4.0, "",
                                                "block norm over 2^{n(1-1/p)}, n=1..12"));
        }
    }

    for (const BlockSelector& sel : kBlockSelectors) {
        reps.push_back(ph_band_suite(std::string("block_mean_bound_") + sel.suffix, 0.0, tables,
                                     infl, [&sel](const PhasesMember& m) {
                                         double worst = 0.0;
                                         for (const double bn : m.*sel.b) {
                                             worst = std::max(worst, bn);
                                         }
                                         return worst / m.s.get(sel.hardy_key);
                                     }));
    }

    {
        std::vector<RatioRow> rows;
        std::string diag;
        for (const DegreeTable& t : tables) {
            std::vector<double> rr;
            for (const PhasesMember& m : t.ph) {
                if (!m.s.error.empty()) {
                    if (diag.empty()) diag = "member aborted: " + m.s.error;
                    continue;
                }
                for (const BlockSelector& sel : kBlockSelectors) {
                    const std::vector<double>& base = m.*sel.b;
                    const std::vector<double>& deriv = m.*sel.db;
                    for (std::size_t n = 1; n < deriv.size(); ++n) {
                        rr.push_back(deriv[n] / (std::ldexp(1.0, static_cast<int>(n)) * base[n]));
                    }
                }
            }
            const Stats st = stats_of(std::move(rr));
            if (st.ok) rows.push_back(RatioRow{t.degree, st.min, st.med, st.max});
        }
        reps.push_back(finish_band_report("block_derivative_equiv", 0.0, std::move(rows), infl,
                                          diag));
    }

    {
        std::vector<RatioRow> rows;
        std::string diag;
        for (const DegreeTable& t : tables) {
            std::vector<double> rr;
            for (const PhasesMember& m : t.ph) {
                if (!m.s.error.empty()) {
                    if (diag.empty()) diag = "member aborted: " + m.s.error;
                    continue;
                }
                for (const BlockSelector& sel : kBlockSelectors) {
                    const std::vector<double>& base = m.*sel.b;
                    const std::vector<double>& rop = m.*sel.rb;
                    for (std::size_t n = 1; n < rop.size(); ++n) {
                        rr.push_back(rop[n] / (std::ldexp(1.0, static_cast<int>(n)) * base[n]));
                    }
                }
            }
            const Stats st = stats_of(std::move(rr));
            if (st.ok) rows.push_back(RatioRow{t.degree, st.min, st.med, st.max});
        }
        reps.push_back(finish_band_report("r_operator_block", 0.0, std::move(rows), infl, diag));
    }

    // Radial two-sided bound for polynomials supported on a window [m0, j]:
    // r^j M_p(1,P) <= M_p(r,P) <= r^{m0} M_p(1,P).
    {
        std::mt19937_64 rng(mix64(cfg.seed ^ 0x57D0ULL));
        const int samples = std::max(16, cfg.count);
        std::vector<double> rr;
        for (int i = 0; i < samples; ++i) {
            const int m0 = static_cast<int>(uniform01(rng) * 48.0);
            const int w = static_cast<int>(uniform01(rng) * 16.0);
            std::vector<Complex> c(static_cast<std::size_t>(m0 + w) + 1);
            for (int k = m0; k <= m0 + w; ++k) {
                const double th = 6.283185307179586 * uniform01(rng);
                c[static_cast<std::size_t>(k)] = Complex(std::cos(th), std::sin(th));
            }
            const CoefficientSeries poly{std::move(c)};
            const int j = m0 + w;
            for (const double p : {1.0, 2.0, kInf}) {
                const double mean1 = hardy_norm(poly, p);
                for (const double r : kRadii) {
                    const double mr = integral_mean_auto(poly, r, p).value;
                    rr.push_back(mr / (std::pow(r, j) * mean1));
                    rr.push_back(std::pow(r, m0) * mean1 / mr);
                }
            }
        }
        const Stats st = stats_of(std::move(rr));
        std::vector<RatioRow> rows;
        if (st.ok) rows.push_back(RatioRow{64, st.min, st.med, st.max});
        reps.push_back(finish_range_report("windowed_mean_bounds", 0.0, std::move(rows),
                                           1.0 - 1e-9, kInf, st.ok ? "" : "non-finite ratios",
                                           "two-sided radial bound ratios; both must be >= 1"));
    }

    // Same bounds for the frame blocks of f', exponents 2^{n-1}-1 and
    // 2^{n+1}-1, reported as 1 + slack normalized by the block norm.
    {
        std::vector<RatioRow> rows;
        std::string diag;
        for (const DegreeTable& t : tables) {
            std::vector<double> rr;
            const int mcap = std::min<int>(static_cast<int>(t.ph.size()), 8);
            for (int i = 0; i < mcap; ++i) {
                const PhasesMember& m = t.ph[static_cast<std::size_t>(i)];
                if (!m.s.error.empty()) {
                    if (diag.empty()) diag = "member aborted: " + m.s.error;
                    continue;
                }
                const CoefficientSeries fd = derivative(m.f);
                for (int n = 1; n <= t.frame->n_max(); ++n) {
                    const CoefficientSeries block = hadamard(t.frame->vn(n), fd);
                    for (const BlockSelector& sel : kBlockSelectors) {
                        const double bp = (m.*sel.db)[static_cast<std::size_t>(n)];
                        if (!(bp > 0.0)) continue;
                        for (const double r : kRadii) {
                            const double mr = integral_mean_auto(block, r, sel.p).value;
                            const double lo_ref =
                                std::pow(r, std::ldexp(2.0, n) - 1.0) * bp;
                            const double hi_ref =
                                std::pow(r, std::ldexp(0.5, n) - 1.0) * bp;
                            rr.push_back(1.0 + (mr - lo_ref) / bp);
                            rr.push_back(1.0 + (hi_ref - mr) / bp);
                        }
                    }
                }
            }
            const Stats st = stats_of(std::move(rr));
            if (st.ok) rows.push_back(RatioRow{t.degree, st.min, st.med, st.max});
        }
        reps.push_back(finish_range_report("block_derivative_radial", 0.0, std::move(rows),
                                           1.0 - 1e-9, kInf, diag,
                                           "1 + normalized slack of the radial block bounds"));
    }

    {
        std::vector<RatioRow> rows;
        std::string diag;
        for (const DegreeTable& t : tables) {
            std::vector<double> rr;
            for (const MemberScalars& m : t.dec) {
                if (!m.error.empty()) {
                    if (diag.empty()) diag = "member aborted: " + m.error;
                    continue;
                }
                for (const double r : kRadii) rr.push_back(1.0 + m.get(akey("hardygap@", r)));
            }
            const Stats st = stats_of(std::move(rr));
            if (st.ok) rows.push_back(RatioRow{t.degree, st.min, st.med, st.max});
        }
        reps.push_back(finish_range_report("hardy_coeff_step", 0.0, std::move(rows), 1.0 - 1e-9,
                                           kInf, diag, "1 + coefficient-sum slack under pi*M_1"));
    }

    {
        struct Task {
            int table;
            int member;
            double r;
        };
        std::vector<Task> tasks;
        const int mcap = std::min(cfg.count, 4);
        for (int ti = 0; ti < static_cast<int>(tables.size()); ++ti) {
            for (int i = 0; i < mcap && i < static_cast<int>(tables[ti].ph.size()); ++i) {
                for (const double r : kRadii) tasks.push_back({ti, i, r});
            }
        }
        std::vector<double> gaps(tasks.size(),
                                 std::numeric_limits<double>::quiet_NaN());
        parallel_for(static_cast<int>(tasks.size()), cfg.threads, [&](int k) {
            const Task& task = tasks[static_cast<std::size_t>(k)];
            const PhasesMember& m =
                tables[static_cast<std::size_t>(task.table)].ph[static_cast<std::size_t>(task.member)];
            if (!m.s.error.empty()) return;
            gaps[static_cast<std::size_t>(k)] = libera_derivative_bound_gap(m.f, task.r);
        });
        std::vector<RatioRow> rows;
        std::string diag;
        for (int ti = 0; ti < static_cast<int>(tables.size()); ++ti) {
            std::vector<double> rr;
            for (std::size_t k = 0; k < tasks.size(); ++k) {
                if (tasks[k].table == ti && std::isfinite(gaps[k])) rr.push_back(1.0 + gaps[k]);
            }
            const Stats st = stats_of(std::move(rr));
            if (st.ok) {
                rows.push_back(RatioRow{tables[static_cast<std::size_t>(ti)].degree, st.min,
                                        st.med, st.max});
            } else if (diag.empty()) {
                diag = "missing tail-average derivative gaps at degree " +
                       std::to_string(tables[static_cast<std::size_t>(ti)].degree);
            }
        }
        reps.push_back(finish_range_report("libera_derivative_bound", 0.0, std::move(rows),
                                           1.0 - 1e-8, kInf, diag,
                                           "1 + gap of the tail-average derivative bound"));
    }

    {
        const auto phi = [](double x) { return std::pow(x, 0.8); };
        const double exps[] = {0.6, 1.0, 2.0};
        const struct {
            const char* suffix;
            double q;
        } qcases[] = {{"q1", 1.0}, {"q2", 2.0}, {"qinf", kInf}};
        for (const auto& qc : qcases) {
            std::vector<RatioRow> rows;
            for (const double s : exps) {
                std::vector<double> lambda(20);
                for (std::size_t n = 0; n < lambda.size(); ++n) {
                    lambda[n] = std::pow(static_cast<double>(n) + 1.0, -s);
                }
                const std::array<double, 3> sides = discretization_sides(phi, qc.q, lambda);
                const double r1 = sides[0] / sides[2];
                const double r2 = sides[1] / sides[2];
                rows.push_back(RatioRow{std::lround(10.0 * s), std::min(r1, r2), 0.5 * (r1 + r2),
                                        std::max(r1, r2)});
            }
            reps.push_back(finish_range_report(
                std::string("discretization_sides_") + qc.suffix, 0.0, std::move(rows), 1e-300,
                kInf, "",
                "sup-side and sum-side continuous norms over the discrete side; both "
                "pairings reported"));
        }
    }

    {
        const struct {
            const char* suffix;
            std::function<double(double)> phi;
        } cases[] = {
            {"linear", [](double x) { return x; }},
            {"pow08", [](double x) { return std::pow(x, 0.8); }},
            {"logmix", [](double x) { return x / std::log(2.0 / x); }},
        };
        for (const auto& c : cases) {
            std::vector<double> rr;
            for (const int n : {0, 1, 3, 7, 15, 31, 63, 127, 255, 511, 1023}) {
                const auto [quad, discrete] = normal_weight_moment_bound(c.phi, n);
                rr.push_back(quad / discrete);
            }
            const Stats st = stats_of(std::move(rr));
            std::vector<RatioRow> rows;
            if (st.ok) rows.push_back(RatioRow{1023, st.min, st.med, st.max});
            reps.push_back(finish_spread_report(std::string("normal_weight_moment_") + c.suffix,
                                                0.0, std::move(rows), 5.0,
                                                st.ok ? "" : "non-finite ratios",
                                                "singular moment quadrature over phi(1/(n+1))"));
        }
    }

    {
        const Frame window_frame(6);
        std::vector<RatioRow> rows;
        for (int n = 2; n <= 5; ++n) {
            std::vector<double> rr;
            for (int k = (1 << (n - 1)); k <= (1 << (n + 1)); ++k) {
                const CoefficientSeries qk =
                    hadamard(window_frame.vn(n), delta_polynomial(n, k));
                // The cut at the left support edge lands on the bump's zero
                // endpoint and yields the zero polynomial; nothing to measure.
                if (qk.top_nonzero() < 0)
                    continue;
                rr.push_back(hardy_norm(qk, 1.0) / (static_cast<double>(n) + 1.0));
            }
            const Stats st = stats_of(std::move(rr));
            if (st.ok) rows.push_back(RatioRow{1L << (n + 1), st.min, st.med, st.max});
        }
        reps.push_back(finish_range_report("window_block_h1", 0.0, std::move(rows), 1e-300, 1.0,
                                           "", "window-cut block H1 norm over (n+1)"));
    }

    {
        std::vector<RatioRow> rows;
        std::string diag;
        for (const DegreeTable& t : tables) {
            std::vector<double> rr;
            const int mcap = std::min<int>(static_cast<int>(t.ph.size()), 4);
            for (int i = 0; i < mcap; ++i) {
                const PhasesMember& m = t.ph[static_cast<std::size_t>(i)];
                if (!m.s.error.empty()) {
                    if (diag.empty()) diag = "member aborted: " + m.s.error;
                    continue;
                }
                CoefficientSeries acc = CoefficientSeries::zero(static_cast<int>(t.degree));
                for (const CoefficientSeries& b : frame_decompose(m.f, *t.frame)) {
                    acc = add(acc, b);
                }
                rr.push_back(1.0 + max_coeff_distance(acc, m.f));
            }
            const Stats st = stats_of(std::move(rr));
            if (st.ok) rows.push_back(RatioRow{t.degree, st.min, st.med, st.max});
        }
        reps.push_back(finish_range_report("frame_reconstruction", 0.0, std::move(rows), 1.0,
                                           1.0 + 1e-12, diag,
                                           "1 + max coefficient deviation of summed blocks"));
    }

    {
        std::vector<RatioRow> rows;
        std::string diag;
        for (const DegreeTable& t : tables) {
            std::vector<double> rr;
            const int pairs = std::min(cfg.count, 16);
            for (int i = 0; i < pairs; ++i) {
                const PhasesMember& mf = t.ph[static_cast<std::size_t>(i)];
                const PhasesMember& mg =
                    t.ph[static_cast<std::size_t>((i + 1) % cfg.count)];
                if (!mf.s.error.empty() || !mg.s.error.empty()) continue;
                const Complex lhs = pairing(cesaro(mf.f), mg.f).value;
                const Complex rhs = pairing(mf.f, libera_coeff(mg.f)).value;
                rr.push_back(1.0 + std::abs(lhs - rhs) / (1.0 + std::abs(rhs)));
            }
            const Stats st = stats_of(std::move(rr));
            if (st.ok) rows.push_back(RatioRow{t.degree, st.min, st.med, st.max});
        }
        reps.push_back(finish_range_report("adjoint_identity", 0.0, std::move(rows), 1.0,
                                           1.0 + 1e-12, diag,
                                           "1 + relative averaging/tail-sum transpose defect"));
    }

    for (const double al : {-1.0, 0.0, 1.0}) {
        reps.push_back(ph_band_suite("tail_sum_vs_bloch", al, tables, infl,
                                     [al](const PhasesMember& m) {
                                         return m.s.get("ell1") / m.s.get(akey("supf@", al));
                                     }));
    }
    for (const double al : {0.0, 1.0}) {
        reps.push_back(ph_band_suite("tail_sum_vs_area", al, tables, infl,
                                     [al](const PhasesMember& m) {
                                         return m.s.get("ell1") / m.s.get(akey("areaf@", al));
                                     }));
    }

    // At negative exponent the tail-sum norm is not controlled by the area
    // norm; the slowly-divergent witness family makes the ratio climb with
    // the degree.
    {
        std::vector<RatioRow> rows;
        for (const DegreeTable& t : tables) {
            TestFamilySpec sp;
            sp.kind = FamilyKind::logpower;
            sp.degree = static_cast<int>(t.degree);
            sp.count = 1;
            sp.seed = cfg.seed;
            sp.eps = 1.5;
            sp.alpha = -0.5;
            const CoefficientSeries f = family_member(sp, 0);
            const double ratio = ell1_minus1_norm(f) /
                                 bloch1_log_norm(f, WeightSpec::log_alpha(-0.5)).value;
            rows.push_back(RatioRow{t.degree, ratio, ratio, ratio});
        }
        EquivalenceReport rep;
        rep.theorem_tag = "tail_sum_vs_area_unbounded";
        rep.alpha = -0.5;
        rep.rows = rows;
        bool increasing = rows.size() >= 2;
        for (std::size_t i = 1; i < rows.size(); ++i) {
            if (!(rows[i].ratio_median > rows[i - 1].ratio_median)) increasing = false;
        }
        const double growth =
            rows.empty() ? 0.0 : rows.back().ratio_median / rows.front().ratio_median;
        rep.pass = increasing;
        rep.notes = "ratio must climb with degree; growth factor " + format_real(growth) +
                    " across the sweep";
        reps.push_back(std::move(rep));
    }

    return reps;
}

// ---- mapping suite ---------------------------------------------------------

std::vector<EquivalenceReport> mapping_core(const SuiteConfig& cfg,
                                            const std::vector<DegreeTable>& tables) {
    std::vector<EquivalenceReport> reps;
    if (cfg.count <= 0) return reps;
    const double infl = cfg.band_inflation;

    for (const double al : {-0.5, 0.0, 1.0}) {
        reps.push_back(ph_band_suite("cesaro_log_shift", al, tables, infl,
                                     [al](const PhasesMember& m) {
                                         return m.s.get(akey("supC@", al + 1.0)) /
                                                m.s.get(akey("supf@", al));
                                     }));
    }
    reps.push_back(ph_band_suite("cesaro_plain_bloch", 0.0, tables, infl,
                                 [](const PhasesMember& m) {
                                     return m.s.get("supC@1") / m.s.get("supf@0");
                                 }));
    reps.push_back(ph_band_suite("cesaro_loglog_target", -1.0, tables, infl,
                                 [](const PhasesMember& m) {
                                     return m.s.get("supC@loglog") / m.s.get("supf@-1");
                                 }));

    for (const double al : {0.5, 1.0, 2.0}) {
        reps.push_back(dec_band_suite("libera_log_shift", al, tables, infl,
                                      [al](const MemberScalars& m) {
                                          return m.get(akey("areaL@", al - 1.0)) /
                                                 m.get(akey("areaf@", al));
                                      }));
    }
    reps.push_back(dec_band_suite("libera_loglog_source", -1.0, tables, infl,
                                  [](const MemberScalars& m) {
                                      return m.get("areaL@-1") / m.get("areaf@loglog");
                                  }));
    reps.push_back(dec_band_suite("libera_power_weight", -2.0, tables, infl,
                                  [](const MemberScalars& m) {
                                      return m.get("areaL@pow2") / m.get("areaf@0");
                                  }));
    reps.push_back(dec_band_suite("libera_plain_area", 1.0, tables, infl,
                                  [](const MemberScalars& m) {
                                      return m.get("areaL@0") / m.get("areaf@1");
                                  }));

    const auto pairing_suite = [&](const std::string& tag, double al, bool use_loglog) {
        std::vector<RatioRow> rows;
        std::string diag;
        for (const DegreeTable& t : tables) {
            std::vector<double> rr;
            for (int i = 0; i < cfg.count; ++i) {
                const PhasesMember& mf = t.ph[static_cast<std::size_t>(i)];
                const PhasesMember& mg =
                    t.ph[static_cast<std::size_t>((i + 1) % cfg.count)];
                if (!mf.s.error.empty() || !mg.s.error.empty()) {
                    if (diag.empty()) diag = "member aborted";
                    continue;
                }
                const double num = std::abs(pairing(mf.f, mg.f).value);
                const double den = use_loglog
                                       ? mf.s.get("areaf@loglog") * mg.s.get("supf@loglog")
                                       : mf.s.get(akey("areaf@", al)) *
                                             mg.s.get(akey("supf@", al));
                rr.push_back(num / den);
            }
            const Stats st = stats_of(std::move(rr));
            if (st.ok) rows.push_back(RatioRow{t.degree, st.min, st.med, st.max});
        }
        return finish_band_report(tag, al, std::move(rows), infl, diag);
    };

    for (const double al : kPhAreaF) {
        reps.push_back(pairing_suite("pairing_bound", al, false));
    }
    reps.push_back(pairing_suite("pairing_bound_loglog", -1.0, true));

    return reps;
}

// ---- completeness ----------------------------------------------------------

const char* const kRequiredTags[] = {
    "decreasing_coeff_band",
    "libera_coeff_band",
    "libera_coeff_loglog",
    "frame_norm_bloch_equiv",
    "frame_norm_area_equiv",
    "frame_norm_loglog_area",
    "frame_norm_loglog_bloch",
    "little_bloch_profile",
    "block_norm_growth",
    "block_mean_bound",
    "block_derivative_equiv",
    "r_operator_block",
    "windowed_mean_bounds",
    "block_derivative_radial",
    "hardy_coeff_step",
    "libera_derivative_bound",
    "discretization_sides",
    "normal_weight_moment",
    "window_block_h1",
    "tail_sum_vs_bloch",
    "tail_sum_vs_area",
    "tail_sum_vs_area_unbounded",
    "frame_reconstruction",
    "adjoint_identity",
    "cesaro_log_shift",
    "cesaro_plain_bloch",
    "cesaro_loglog_target",
    "libera_log_shift",
    "libera_loglog_source",
    "libera_power_weight",
    "libera_plain_area",
    "pairing_bound",
    "pairing_bound_loglog",
    "divergence_family",
};

EquivalenceReport completeness_report(const std::vector<EquivalenceReport>& equivalence,
                                      const std::vector<EquivalenceReport>& mapping,
                                      bool demo_ran) {
    std::set<std::string> emitted;
    for (const EquivalenceReport& r : equivalence) emitted.insert(r.theorem_tag);
    for (const EquivalenceReport& r : mapping) emitted.insert(r.theorem_tag);
    if (demo_ran) emitted.insert("divergence_family");

    const auto covered = [&emitted](const std::string& want) {
        for (const std::string& tag : emitted) {
            if (tag == want) return true;
            if (tag.size() > want.size() + 1 && tag.compare(0, want.size(), want) == 0 &&
                tag[want.size()] == '_') {
                return true;
            }
        }
        return false;
    };

    std::string missing;
    for (const char* const want : kRequiredTags) {
        if (!covered(want)) {
            if (!missing.empty()) missing += ", ";
            missing += want;
        }
    }
    EquivalenceReport rep;
    rep.theorem_tag = "suite_completeness";
    rep.pass = missing.empty();
    rep.notes = missing.empty() ? "every claim family in scope reported"
                                : "missing claim families: " + missing;
    return rep;
}

} // namespace

// ---- public entry points ---------------------------------------------------

SuiteConfig SuiteConfig::from_config(const Config& cfg) {
    SuiteConfig c;
    c.seed = cfg.get_uint64("verify", "seed", c.seed);
    c.degrees = cfg.get_int_list("verify", "degrees", c.degrees);
    c.count = static_cast<int>(cfg.get_int("verify", "count", c.count));
    c.band_inflation = cfg.get_real("verify", "band_inflation", c.band_inflation);
    c.threads = static_cast<int>(cfg.get_int("verify", "threads", c.threads));
    c.div_alpha = cfg.get_real("divergence", "alpha", c.div_alpha);
    c.div_eps = cfg.get_real("divergence", "eps", c.div_eps);
    c.div_m = cfg.get_int_list("divergence", "m_list", c.div_m);
    c.div_band_bound = cfg.get_real("divergence", "band_bound", c.div_band_bound);

    c.degrees = checked_degrees(c);
    if (c.count < 0) throw std::runtime_error("count must be >= 0");
    if (!(c.band_inflation >= 1.0)) throw std::runtime_error("band_inflation must be >= 1");
    if (!(c.div_alpha < 0.0)) throw std::runtime_error("divergence alpha must be negative");
    for (const long m : c.div_m) {
        if (m < 0 || m > 24) throw std::runtime_error("divergence m values must be in [0, 24]");
    }
    return c;
}

std::vector<EquivalenceReport> run_equivalence_suite(const SuiteConfig& cfg) {
    const std::vector<DegreeTable> tables = build_tables(cfg, nullptr);
    return equivalence_core(cfg, tables);
}

std::vector<EquivalenceReport> run_operator_mapping_suite(const SuiteConfig& cfg) {
    const std::vector<DegreeTable> tables = build_tables(cfg, nullptr);
    return mapping_core(cfg, tables);
}

DivergenceReport run_divergence_demo(double alpha, double eps, const std::vector<long>& m_list,
                                     double band_bound) {
    if (!(alpha < 0.0)) throw std::domain_error("divergence demo requires alpha < 0");
    if (m_list.empty()) throw std::invalid_argument("divergence demo needs at least one m");
    if (eps <= 0.0) eps = 1.0 - alpha;
    std::vector<long> ms = m_list;
    std::sort(ms.begin(), ms.end());
    for (const long m : ms) {
        if (m < 0 || m > 24) throw std::invalid_argument("m values must be in [0, 24]");
    }

    DivergenceReport rep;
    rep.alpha = alpha;
    rep.eps = eps;
    const double power = -(eps + alpha);
    constexpr long kFrameDegreeCap = (1L << 18) - 1;
    std::map<int, Frame> frames;

    for (const long m : ms) {
        const double r = 1.0 - std::ldexp(1.0, -static_cast<int>(m));
        const long direct_top = 1L << (m + 4);

        KahanSum direct;
        double rk = 1.0;
        for (long k = 0; k <= direct_top; ++k) {
            const double dk = static_cast<double>(k);
            direct.add(rk * std::pow(std::log(dk + 2.0), power) / (dk + 1.0));
            rk *= r;
        }

        const long frame_degree = std::min(direct_top, kFrameDegreeCap);
        std::vector<Complex> coeffs(static_cast<std::size_t>(frame_degree) + 1);
        rk = 1.0;
        for (long k = 0; k <= frame_degree; ++k) {
            coeffs[static_cast<std::size_t>(k)] =
                Complex(rk * std::pow(std::log(static_cast<double>(k) + 2.0), power), 0.0);
            rk *= r;
        }
        const CoefficientSeries fr{std::move(coeffs)};
        const int order = frame_order_for_degree(frame_degree);
        auto it = frames.find(order);
        if (it == frames.end()) it = frames.emplace(order, Frame(order)).first;

        rep.m_list.push_back(m);
        rep.libera_at_zero.push_back(direct.value());
        rep.frame_norms.push_back(frame_norm_b1(fr, alpha, it->second));
        if (direct_top > kFrameDegreeCap && rep.notes.empty()) {
            rep.notes = "frame side truncated at degree " + std::to_string(kFrameDegreeCap) +
                        "; the r^k damping keeps the discarded blocks negligible";
        }
    }

    rep.increasing = rep.libera_at_zero.size() >= 1;
    for (std::size_t i = 1; i < rep.libera_at_zero.size(); ++i) {
        if (!(rep.libera_at_zero[i] > rep.libera_at_zero[i - 1])) rep.increasing = false;
    }
    const auto [lo_it, hi_it] = std::minmax_element(rep.frame_norms.begin(), rep.frame_norms.end());
    rep.frame_band = (rep.frame_norms.empty() || *lo_it <= 0.0) ? kInf : *hi_it / *lo_it;
    rep.last_over_first = rep.libera_at_zero.front() > 0.0
                              ? rep.libera_at_zero.back() / rep.libera_at_zero.front()
                              : kInf;
    rep.pass = rep.increasing && std::isfinite(rep.frame_band) && rep.frame_band <= band_bound;
    return rep;
}

VerifyRun run_all(const SuiteConfig& cfg, SuiteTimings* timings) {
    SuiteTimings local;
    SuiteTimings* tm = timings ? timings : &local;
    const double t0 = now_seconds();

    VerifyRun run;
    const std::vector<DegreeTable> tables = build_tables(cfg, tm);
    run.equivalence = equivalence_core(cfg, tables);
    run.mapping = mapping_core(cfg, tables);

    const double td = now_seconds();
    run.divergence = run_divergence_demo(cfg.div_alpha, cfg.div_eps, cfg.div_m, cfg.div_band_bound);
    tm->divergence_seconds = now_seconds() - td;

    run.completeness = completeness_report(run.equivalence, run.mapping, true);

    run.all_pass = run.divergence.pass && run.completeness.pass;
    for (const EquivalenceReport& r : run.equivalence) run.all_pass = run.all_pass && r.pass;
    for (const EquivalenceReport& r : run.mapping) run.all_pass = run.all_pass && r.pass;
    tm->total_seconds = now_seconds() - t0;
    return run;
}

std::vector<std::string> write_verify_reports(const VerifyRun& run, ReportFormat format,
                                              const std::string& out_dir) {
    std::filesystem::create_directories(out_dir);
    const std::string ext = format == ReportFormat::json ? ".json" : ".csv";
    const std::string eq_path = out_dir + "/equivalence" + ext;
    const std::string map_path = out_dir + "/mapping" + ext;
    const std::string div_path = out_dir + "/divergence" + ext;

    emit_report(run.equivalence, format, eq_path);
    std::vector<EquivalenceReport> with_meta = run.mapping;
    with_meta.push_back(run.completeness);
    emit_report(with_meta, format, map_path);
    emit_divergence_report(run.divergence, format, div_path);
    return {eq_path, map_path, div_path};
}

} // namespace logbloch
