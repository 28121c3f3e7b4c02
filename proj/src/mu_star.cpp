#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <numeric>

#include <json.hpp>

#include "jacquet/jacquet.hpp"
#include "jacquet/lfunctions.hpp"
#include "jacquet/mu_star.hpp"

namespace jacquet {

namespace {

void k_sets_rec(const std::vector<int>& as, std::size_t i, int remaining, KTuple& cur, std::vector<KTuple>& out) {
    if (i == as.size()) {
        if (remaining == 0) out.push_back(cur);
        return;
    }
    int hi = std::min(as[i], remaining);
    if (i > 0 && as[i - 1] == as[i]) hi = std::min(hi, cur[i - 1]);
    for (int k = hi; k >= 0; --k) {
        cur[i] = k;
        k_sets_rec(as, i + 1, remaining - k, cur, out);
    }
}

std::vector<KTuple> k_sets_of(const std::vector<int>& as, int m) {
    std::vector<KTuple> out;
    if (m < 0) return out;
    KTuple cur(as.size(), 0);
    k_sets_rec(as, 0, m, cur, out);
    return out;
}

std::vector<HalfInt> x_of_k_of(const std::vector<int>& as, const KTuple& k) {
    if (k.size() != as.size()) throw std::invalid_argument("k-tuple length does not match the rho-part");
    std::vector<HalfInt> xs;
    for (std::size_t i = 0; i < as.size(); ++i) {
        if (k[i] < 0 || k[i] > as[i]) throw std::invalid_argument("k-tuple entry out of range");
        HalfInt x = HalfInt::from_twice(as[i] - 1);
        for (int j = 0; j < k[i]; ++j) xs.push_back(x - HalfInt(j));
    }
    return xs;
}

GLLabel delta_of_k_of(const std::vector<int>& as, const RhoKey& rho, const KTuple& k) {
    std::vector<Segment> segs;
    for (std::size_t i = 0; i < as.size(); ++i) {
        if (k[i] == 0) continue;
        HalfInt x = HalfInt::from_twice(as[i] - 1);
        segs.emplace_back(rho, x, x - HalfInt(k[i] - 1));
    }
    return GLLabel(std::move(segs));
}

using MatrixKey = std::pair<std::vector<int>, int>;
std::mutex matrix_mutex;
std::map<MatrixKey, JacMatrix> matrix_cache;

std::filesystem::path cache_file(const MatrixKey& key) {
    const char* dir = std::getenv("JACQUET_CACHE_DIR");
    if (dir == nullptr || *dir == '\0') return {};
    std::string name = "jacmatrix_";
    for (int a : key.first) name += std::to_string(a) + "_";
    name += "m" + std::to_string(key.second) + ".json";
    return std::filesystem::path(dir) / name;
}

nlohmann::json matrix_to_json(const RationalMatrix& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& row : m) {
        nlohmann::json r = nlohmann::json::array();
        for (const auto& q : row) r.push_back(to_string(q));
        rows.push_back(std::move(r));
    }
    return rows;
}

RationalMatrix matrix_from_json(const nlohmann::json& j) {
    RationalMatrix m;
    for (const auto& row : j) {
        std::vector<Rational> r;
        for (const auto& q : row) r.push_back(parse_rational(q.get<std::string>()));
        m.push_back(std::move(r));
    }
    return m;
}

std::optional<JacMatrix> load_matrix(const MatrixKey& key) {
    auto path = cache_file(key);
    if (path.empty() || !std::filesystem::exists(path)) return std::nullopt;
    try {
        std::ifstream in(path);
        auto j = nlohmann::json::parse(in);
        JacMatrix jm;
        jm.order = j.at("order").get<std::vector<KTuple>>();
        jm.entries = matrix_from_json(j.at("entries"));
        jm.inverse = matrix_from_json(j.at("inverse"));
        if (jm.order != k_sets_of(key.first, key.second)) return std::nullopt;
        return jm;
    } catch (const std::exception&) {
        return std::nullopt;  // unreadable cache entries are recomputed
    }
}

void store_matrix(const MatrixKey& key, const JacMatrix& jm) {
    auto path = cache_file(key);
    if (path.empty()) return;
    std::error_code ec;
    std::filesystem::create_directories(path.parent_path(), ec);
    nlohmann::json j{{"order", jm.order}, {"entries", matrix_to_json(jm.entries)}, {"inverse", matrix_to_json(jm.inverse)}};
    auto tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp);
        if (!out) return;
        out << j.dump() << "\n";
    }
    std::filesystem::rename(tmp, path, ec);
}

JacMatrix build_matrix(const std::vector<int>& as, int m) {
    const RhoKey rho = RhoKey::trivial();  // dimensions do not depend on rho
    JacMatrix jm;
    jm.order = k_sets_of(as, m);
    const std::size_t n = jm.order.size();
    std::vector<std::vector<HalfInt>> xs;
    std::vector<GLLabel> deltas;
    for (const auto& k : jm.order) {
        xs.push_back(x_of_k_of(as, k));
        deltas.push_back(delta_of_k_of(as, rho, k));
    }
    // Entries vanish unless x(k) and x(l) agree as multisets.
    std::vector<std::vector<HalfInt>> contents = xs;
    for (auto& c : contents) std::sort(c.begin(), c.end());
    jm.entries.assign(n, std::vector<Rational>(n, Rational(0)));
    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t l = 0; l < n; ++l) {
            if (contents[k] == contents[l]) jm.entries[k][l] = static_cast<long>(jac_dim(xs[k], deltas[l], rho));
        }
    }
    // Lower triangular when rows and columns are listed by ascending x(k).
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    std::stable_sort(perm.begin(), perm.end(), [&](std::size_t i, std::size_t j) { return xs[i] < xs[j]; });
    jm.inverse = invert_triangular(jm.entries, perm);
    return jm;
}

}  // namespace

std::vector<KTuple> k_sets(const GoodParityParam& phi, const RhoKey& rho, int m) {
    return k_sets_of(phi.rho_part(rho), m);
}

std::vector<HalfInt> x_of_k(const GoodParityParam& phi, const RhoKey& rho, const KTuple& k) {
    return x_of_k_of(phi.rho_part(rho), k);
}

GLLabel delta_of_k(const GoodParityParam& phi, const RhoKey& rho, const KTuple& k) {
    return delta_of_k_of(phi.rho_part(rho), rho, k);
}

JacMatrix jac_matrix(const GoodParityParam& phi, const RhoKey& rho, int m) {
    MatrixKey key(phi.rho_part(rho), m);
    {
        std::lock_guard<std::mutex> lock(matrix_mutex);
        auto it = matrix_cache.find(key);
        if (it != matrix_cache.end()) return it->second;
    }
    auto loaded = load_matrix(key);
    JacMatrix jm = loaded ? std::move(*loaded) : build_matrix(key.first, key.second);
    if (!loaded) store_matrix(key, jm);
    std::lock_guard<std::mutex> lock(matrix_mutex);
    matrix_cache.emplace(std::move(key), jm);
    return jm;
}

void clear_matrix_cache() {
    std::lock_guard<std::mutex> lock(matrix_mutex);
    matrix_cache.clear();
}

VirtualBiRep mu_star_rho(const TemperedLabel& t, const RhoKey& rho) {
    const StandardLabel self{{}, t};
    VirtualBiRep out = VirtualBiRep::single(BiLabel(GLLabel(), self));
    const std::vector<int> as = t.param.rho_part(rho);
    if (as.empty()) return out;
    const int total = std::accumulate(as.begin(), as.end(), 0);
    const int top = std::min(total, t.param.dim() / (2 * rho.dim));
    const VirtualGRep start = VirtualGRep::single(self);
    for (int m = 1; m <= top; ++m) {
        const JacMatrix jm = jac_matrix(t.param, rho, m);
        const std::size_t n = jm.order.size();
        std::vector<VirtualGRep> jacs(n);
        for (std::size_t l = 0; l < n; ++l) jacs[l] = jac_vector(start, rho, x_of_k_of(as, jm.order[l]));
        for (std::size_t k = 0; k < n; ++k) {
            const GLLabel delta = delta_of_k_of(as, rho, jm.order[k]);
            for (std::size_t l = 0; l < n; ++l) {
                const Rational& c = jm.inverse[k][l];
                if (is_zero(c)) continue;
                for (const auto& [sigma, d] : jacs[l]) out.add(BiLabel(delta, sigma), Rational(c * d));
            }
        }
    }
    return out;
}

VirtualBiRep mu_star_rho(const StandardLabel& lbl, const RhoKey& rho) {
    GLTensorSum mstar;
    for (const auto& [ab, c] : big_mstar(lbl.gl_label())) {
        const auto& left = ab.first.segments();
        if (std::all_of(left.begin(), left.end(), [&](const Segment& s) { return s.rho == rho; })) mstar.add(ab, c);
    }
    return induct(mstar, mu_star_rho(lbl.core, rho));
}

namespace {

VirtualBiRep mu_star_tempered_core(const TemperedLabel& t) {
    VirtualBiRep cur = VirtualBiRep::single(BiLabel(GLLabel(), StandardLabel{{}, t}));
    for (const RhoKey& rho : t.param.rhos()) {
        VirtualBiRep next;
        for (const auto& [bi, c] : cur) {
            for (const auto& [bi2, d] : mu_star_rho(bi.second, rho)) {
                next.add(BiLabel(bi.first * bi2.first, bi2.second), Rational(c * d));
            }
        }
        cur = std::move(next);
    }
    return cur;
}

}  // namespace

VirtualBiRep mu_star_standard(const VirtualGRep& v) {
    VirtualBiRep out;
    for (const auto& [lbl, c] : v) {
        VirtualBiRep part = induct(big_mstar(lbl.gl_label()), mu_star_tempered_core(lbl.core));
        out.add_scaled(part, c);
    }
    return out;
}

VirtualBiRep mu_star_full(const VirtualGRep& v) {
    for (const auto& [lbl, c] : v) {
        if (lbl.is_tempered()) continue;
        if (!is_generic(twisted_param_of(lbl))) {
            throw NonGenericStandard("the parameter of a non-tempered label is not generic; mu* of its irreducible "
                                     "quotient is not determined");
        }
    }
    return mu_star_standard(v);
}

VirtualBiRep jac_P_k(const VirtualGRep& v, int k) {
    int rank = 0;
    for (const auto& [lbl, c] : v) rank = std::max(rank, lbl.rank());
    if (k < 0 || k > rank) throw std::out_of_range("degree k must lie in [0, rank]");
    return degree_part(mu_star_full(v), k);
}

}  // namespace jacquet
