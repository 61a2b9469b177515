#include "liecoh/reproduce.hpp"

#include <json.hpp>

#include <atomic>
#include <random>
#include <thread>

#include "liecoh/bruteforce.hpp"
#include "liecoh/cohomology.hpp"
#include "liecoh/derivations.hpp"
#include "liecoh/families.hpp"
#include "liecoh/lie_algebra.hpp"

namespace liecoh {

namespace {

using json = nlohmann::ordered_json;

LieAlgebra heisenberg() {
    BracketTable t;
    VectorQ v(3);
    v[2] = Rational(1);
    t[{0, 1}] = v;
    return LieAlgebra::create(3, {"e1", "e2", "e3"}, std::move(t));
}

LieAlgebra r2() {
    BracketTable t;
    VectorQ v(2);
    v[1] = Rational(1);
    t[{0, 1}] = v;  // [X, Y] = Y
    return LieAlgebra::create(2, {"X", "Y"}, std::move(t));
}

std::vector<Rational> ones(std::size_t count) {
    return std::vector<Rational>(count, Rational(1));
}

struct CorpusEntry {
    std::string id;
    char family;  // 'L','Q','A','B','C', or 'h'/'r' for the fixed algebras
    FamilySpec spec;
};

std::vector<CorpusEntry> corpus() {
    std::vector<CorpusEntry> list;
    list.push_back({"heisenberg", 'h', {}});
    list.push_back({"r2", 'r', {}});
    for (std::uint32_t n = 4; n <= 10; ++n)
        list.push_back({"L" + std::to_string(n), 'L',
                        {FamilySpec::Tag::L, n, 0, 0, {}}});
    for (std::uint32_t n = 4; n <= 10; n += 2)
        list.push_back({"Q" + std::to_string(n), 'Q',
                        {FamilySpec::Tag::Q, n, 0, 0, {}}});
    auto add_ab = [&](char fam, FamilySpec::Tag tag, std::uint32_t n, std::uint32_t k,
                      std::vector<Rational> lambda) {
        FamilySpec s;
        s.tag = tag;
        s.n = n;
        s.k = k;
        s.lambda = std::move(lambda);
        std::string id(1, fam);
        id += std::to_string(n) + "^" + std::to_string(k);
        list.push_back({id, fam, std::move(s)});
    };
    add_ab('A', FamilySpec::Tag::A, 8, 2, ones(2));
    add_ab('A', FamilySpec::Tag::A, 10, 4, ones(2));
    add_ab('A', FamilySpec::Tag::A, 12, 4, ones(3));
    // the antidiagonal sector of B forces lambda_2 = -2 lambda_1 at these sizes
    add_ab('B', FamilySpec::Tag::B, 8, 2, {Rational(1), Rational(-2)});
    add_ab('B', FamilySpec::Tag::B, 10, 4, {Rational(1), Rational(-2)});
    for (std::uint32_t n : {6u, 8u, 10u}) {
        FamilySpec s;
        s.tag = FamilySpec::Tag::C;
        s.n = n;
        s.lambda = ones((n - 2) / 2 - 1);
        list.push_back({"C" + std::to_string(n), 'C', std::move(s)});
    }
    return list;
}

struct AlgebraRecord {
    std::string id;
    std::string spec_str;
    char family = 0;
    std::string error;  // nonempty if the computation threw
    std::size_t dim = 0;
    bool jacobi_ok = false;
    std::size_t b1 = 0;
    bool deltasq_ok = false;
    std::size_t der = 0, inner = 0, z1 = 0, b1_coh = 0;
    std::size_t h0 = 0, h1 = 0, h2 = 0;
    VectorQ central_witness;
    // family constructors only
    bool filiform = false;
    VectorQ witness;
    std::vector<std::size_t> char_seq, char_seq_y1;
    std::size_t torus_dim = 0;
    std::vector<VectorQ> torus;
    std::size_t sd_dim = 0, sd_h0 = 0, sd_h1 = 0;
    bool sd_complete = false;
    bool sd_witness_checked = false;  // C family: witness re-validated
    bool sd_witness_ok = false;
    MatrixQ sd_outer_witness;
};

bool is_family(char f) {
    return f == 'L' || f == 'Q' || f == 'A' || f == 'B' || f == 'C';
}

AlgebraRecord compute_record(const CorpusEntry& entry) {
    AlgebraRecord rec;
    rec.id = entry.id;
    rec.family = entry.family;
    try {
        const LieAlgebra g = entry.family == 'h'   ? heisenberg()
                             : entry.family == 'r' ? r2()
                                                   : build_family(entry.spec);
        const std::size_t n = g.dim();
        rec.dim = n;
        rec.spec_str = is_family(entry.family) ? family_spec_to_string(entry.spec) : entry.id;
        rec.jacobi_ok = jacobi_check(g).empty();
        rec.b1 = first_betti(g);

        rec.deltasq_ok = true;
        for (std::size_t p = 0; p <= 2; ++p)
            if (!(delta_sparse(g, p + 1) * delta_sparse(g, p)).is_zero())
                rec.deltasq_ok = false;

        rec.der = derivation_basis(g).dim();
        rec.inner = inner_basis(g).dim();
        rec.z1 = cochain_dim(n, 1) - delta_sparse(g, 1).rank();
        rec.b1_coh = delta_sparse(g, 0).rank();
        const Subspace z = center(g);
        rec.h0 = z.dim();
        rec.h1 = rec.der - rec.inner;
        rec.h2 = cohomology_dims(g, 2).dim_cohomology;
        if (rec.h0 > 0)
            rec.central_witness = z.basis.front();

        if (is_family(entry.family)) {
            const FiliformCertificate cert = is_filiform(g);
            rec.filiform = cert.certified;
            if (cert.certified) {
                rec.witness = cert.witness;
                rec.char_seq = characteristic_sequence_at(g, cert.witness).parts;
            }
            VectorQ y1(n);
            y1[0] = Rational(1);
            rec.char_seq_y1 = characteristic_sequence_at(g, y1).parts;

            const RankCertificate rank_cert = rank_certificate(g);
            rec.torus_dim = rank_cert.rank_lower_bound;
            rec.torus = rank_cert.torus.weight_vectors;

            const LieAlgebra sd = semidirect(g, rank_cert.torus);
            rec.sd_dim = sd.dim();
            const CompletenessVerdict v = is_complete(sd);
            rec.sd_h0 = v.h0;
            rec.sd_h1 = v.h1;
            rec.sd_complete = v.complete;
            if (entry.family == 'C') {
                rec.sd_witness_checked = true;
                rec.sd_witness_ok = false;
                if (v.outer_witness) {
                    const MatrixQ& w = *v.outer_witness;
                    // valid derivation, genuinely outer, and moving Y2 into Y_{n-1}
                    bool outer = true;
                    std::vector<VectorQ> inner_flat;
                    for (const auto& d : inner_basis(sd).basis) {
                        VectorQ flat;
                        for (std::size_t c = 0; c < sd.dim(); ++c)
                            for (std::size_t r = 0; r < sd.dim(); ++r)
                                flat.push_back(d.at(r, c));
                        inner_flat.push_back(std::move(flat));
                    }
                    VectorQ wflat;
                    for (std::size_t c = 0; c < sd.dim(); ++c)
                        for (std::size_t r = 0; r < sd.dim(); ++r)
                            wflat.push_back(w.at(r, c));
                    outer = !in_span(inner_flat, wflat);
                    rec.sd_witness_ok =
                        is_derivation(sd, w) && outer && !w.at(n - 2, 1).is_zero();
                    rec.sd_outer_witness = w;
                }
            }
        }
    } catch (const std::exception& e) {
        rec.error = e.what();
    }
    return rec;
}

struct RhRecord {
    std::uint32_t k = 0, h = 0;
    std::string error;
    std::size_t dim = 0;
    bool complete = false;
    std::size_t h2 = 0;
    std::size_t bound = 0;  // floor(h/2)
    std::size_t phi_count = 0;
    bool phis_ok = false;
    std::vector<std::string> phi_notes;
};

RhRecord compute_rh(std::uint32_t k, std::uint32_t h) {
    RhRecord rec;
    rec.k = k;
    rec.h = h;
    rec.bound = h / 2;
    try {
        const LieAlgebra r = build_r_h(k, h, ones(h / 2 + 1));
        rec.dim = r.dim();
        rec.complete = is_complete(r).complete;
        rec.h2 = cohomology_dims(r, 2).dim_cohomology;
        rec.phi_count = h / 2 + 1;
        rec.phis_ok = true;
        for (std::uint32_t which = 1; which <= rec.phi_count; ++which) {
            const Cochain phi = deformation_cocycle(r, k, which);
            const bool cocycle = is_cocycle(phi);
            const bool coboundary = is_coboundary(phi).has_value();
            if (!cocycle || coboundary) {
                rec.phis_ok = false;
                rec.phi_notes.push_back("phi_" + std::to_string(which) +
                                        (cocycle ? "" : ": not a cocycle") +
                                        (coboundary ? ": is a coboundary" : ""));
            }
        }
    } catch (const std::exception& e) {
        rec.error = e.what();
    }
    return rec;
}

template <typename T, typename F>
std::vector<T> run_indexed(std::size_t count, unsigned jobs, F&& fn) {
    std::vector<T> out(count);
    if (jobs <= 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i)
            out[i] = fn(i);
        return out;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> workers;
    const unsigned nthreads = std::min<std::size_t>(jobs, count);
    workers.reserve(nthreads);
    for (unsigned w = 0; w < nthreads; ++w)
        workers.emplace_back([&] {
            for (;;) {
                const std::size_t i = next.fetch_add(1);
                if (i >= count)
                    return;
                out[i] = fn(i);
            }
        });
    for (auto& t : workers)
        t.join();
    return out;
}

struct SuiteData {
    std::vector<AlgebraRecord> records;
    std::vector<RhRecord> rh;
};

SuiteData build_suite(unsigned jobs) {
    SuiteData data;
    const auto entries = corpus();
    data.records = run_indexed<AlgebraRecord>(
        entries.size(), jobs, [&](std::size_t i) { return compute_record(entries[i]); });
    const std::vector<std::pair<std::uint32_t, std::uint32_t>> rh_params{
        {4, 3}, {4, 4}, {4, 5}, {6, 3}, {6, 5}, {6, 7}};
    data.rh = run_indexed<RhRecord>(rh_params.size(), jobs, [&](std::size_t i) {
        return compute_rh(rh_params[i].first, rh_params[i].second);
    });
    return data;
}

json vector_to_json(const VectorQ& v) {
    json arr = json::array();
    for (const auto& x : v)
        arr.push_back(x.to_string());
    return arr;
}

json matrix_rows_to_json(const MatrixQ& m) {
    json rows = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r)
        rows.push_back(vector_to_json(m.row(r)));
    return rows;
}

json record_to_json(const AlgebraRecord& r) {
    json doc;
    doc["id"] = r.id;
    if (!r.error.empty()) {
        doc["error"] = r.error;
        return doc;
    }
    doc["spec"] = r.spec_str;
    doc["dim"] = r.dim;
    doc["jacobi"] = r.jacobi_ok ? "pass" : "fail";
    doc["b1"] = r.b1;
    doc["delta_squared_zero"] = r.deltasq_ok;
    doc["dim_der"] = r.der;
    doc["dim_inner"] = r.inner;
    doc["dim_Z1"] = r.z1;
    doc["dim_B1"] = r.b1_coh;
    doc["h0"] = r.h0;
    doc["h1"] = r.h1;
    doc["h2"] = r.h2;
    doc["complete"] = (r.h0 == 0 && r.h1 == 0);
    if (!r.central_witness.empty())
        doc["central_witness"] = vector_to_json(r.central_witness);
    if (is_family(r.family)) {
        doc["filiform"] = r.filiform;
        doc["char_witness"] = vector_to_json(r.witness);
        doc["char_seq"] = r.char_seq;
        doc["char_seq_at_Y1"] = r.char_seq_y1;
        doc["rank"] = r.torus_dim;
        json tv = json::array();
        for (const auto& w : r.torus)
            tv.push_back(vector_to_json(w));
        doc["torus"] = std::move(tv);
        json sd;
        sd["dim"] = r.sd_dim;
        sd["h0"] = r.sd_h0;
        sd["h1"] = r.sd_h1;
        sd["complete"] = r.sd_complete;
        if (r.sd_witness_checked) {
            sd["outer_witness_valid"] = r.sd_witness_ok;
            if (r.sd_outer_witness.rows() > 0)
                sd["outer_witness"] = matrix_rows_to_json(r.sd_outer_witness);
        }
        doc["semidirect"] = std::move(sd);
    }
    return doc;
}

json rh_to_json(const RhRecord& r) {
    json doc;
    doc["k"] = r.k;
    doc["h"] = r.h;
    if (!r.error.empty()) {
        doc["error"] = r.error;
        return doc;
    }
    doc["dim"] = r.dim;
    doc["complete"] = r.complete;
    doc["dim_H2"] = r.h2;
    doc["bound"] = r.bound;
    doc["deformation_cocycles"] = r.phi_count;
    doc["cocycles_noncobounding"] = r.phis_ok;
    return doc;
}

const std::vector<std::string>& conventions() {
    static const std::vector<std::string> notes = {
        "Q_n basis: the spine [Y1,Yj] = Y_{j+1} runs to j = n-2; Y_n is reached by the "
        "antidiagonal products [Yi,Y_{n+1-i}] = (-1)^{i+1} Y_n, i = 2..n/2. This is the basis "
        "in which the diagonal torus attains dimension 2.",
        "B_n^k: products [Yi,Yj] = a_ij Y_{i+j+k-2} run up to target Y_{n-1}; the lambda "
        "parameters must satisfy the linear relations forced by the antidiagonal sector "
        "(lambda_2 = -2 lambda_1 for the sampled (n,k) = (8,2) and (10,4)).",
        "C_n: top-shell signs are (-1)^{i-1}; lower shells carry (-1)^{i+1} lambda_s.",
        "Filiform certificates report the first certified characteristic vector: Y1 for L_n "
        "and A_n^k; Y1+Y2 for Q_n, B_n^k and C_n, whose ad(Y1) has Jordan type (n-2,1,1).",
        "Completeness witnesses are the first derivation-nullspace vector outside the inner "
        "span in the fixed cochain coordinate order.",
    };
    return notes;
}

json suite_body(const SuiteData& data) {
    json body;
    body["conventions"] = conventions();
    json algs = json::array();
    for (const auto& r : data.records)
        algs.push_back(record_to_json(r));
    body["algebras"] = std::move(algs);
    json rh = json::array();
    for (const auto& r : data.rh)
        rh.push_back(rh_to_json(r));
    body["rh"] = std::move(rh);
    return body;
}

// ---- criteria ----

CriterionResult criterion_deltasq(const SuiteData& data) {
    CriterionResult c{1, "coboundary identity: delta_{p+1} . delta_p = 0 for p = 0,1,2", true, {}};
    for (const auto& r : data.records) {
        if (!r.error.empty()) {
            c.pass = false;
            c.details.push_back(r.id + ": " + r.error);
        } else if (!r.deltasq_ok) {
            c.pass = false;
            c.details.push_back(r.id + ": delta composition is nonzero");
        }
    }
    return c;
}

CriterionResult criterion_z1_der(const SuiteData& data) {
    CriterionResult c{2, "dim Der = dim Z^1 and dim Inner = dim B^1 on the corpus", true, {}};
    for (const auto& r : data.records) {
        if (!r.error.empty()) {
            c.pass = false;
            c.details.push_back(r.id + ": " + r.error);
            continue;
        }
        if (r.der != r.z1)
            c.details.push_back(r.id + ": dim Der = " + std::to_string(r.der) +
                                " but dim Z^1 = " + std::to_string(r.z1));
        if (r.inner != r.b1_coh)
            c.details.push_back(r.id + ": dim Inner = " + std::to_string(r.inner) +
                                " but dim B^1 = " + std::to_string(r.b1_coh));
    }
    c.pass = c.pass && c.details.empty();
    return c;
}

CriterionResult criterion_rank(const SuiteData& data) {
    CriterionResult c{3, "rank certificates: 2 for L_n/Q_n, 1 for A/B/C, <= 2 when filiform",
                      true, {}};
    for (const auto& r : data.records) {
        if (!is_family(r.family))
            continue;
        if (!r.error.empty()) {
            c.details.push_back(r.id + ": " + r.error);
            continue;
        }
        const std::size_t expect = (r.family == 'L' || r.family == 'Q') ? 2 : 1;
        if (r.torus_dim != expect)
            c.details.push_back(r.id + ": torus dimension " + std::to_string(r.torus_dim) +
                                ", expected " + std::to_string(expect));
        if (r.filiform && r.torus_dim > 2)
            c.details.push_back(r.id + ": filiform certificate exceeds rank bound 2");
    }
    c.pass = c.details.empty();
    return c;
}

CriterionResult criterion_complete(const SuiteData& data) {
    CriterionResult c{4, "completability: semidirect products complete iff family is L/Q/A/B",
                      true, {}};
    for (const auto& r : data.records) {
        if (!is_family(r.family))
            continue;
        if (!r.error.empty()) {
            c.details.push_back(r.id + ": " + r.error);
            continue;
        }
        const bool expect_complete = r.family != 'C';
        if (r.sd_complete != expect_complete)
            c.details.push_back(r.id + ": semidirect h0 = " + std::to_string(r.sd_h0) +
                                ", h1 = " + std::to_string(r.sd_h1) + ", complete = " +
                                (r.sd_complete ? "true" : "false"));
        if (r.family == 'C' && !r.sd_witness_ok)
            c.details.push_back(r.id +
                                ": outer witness missing, invalid, or lacks the Y2 -> Y_{n-1} "
                                "component");
    }
    c.pass = c.details.empty();
    return c;
}

CriterionResult criterion_h2(const SuiteData& data) {
    CriterionResult c{5, "H^2 growth: dim H^2(r_h) >= floor(h/2), deformation cocycles "
                         "non-cobounding", true, {}};
    for (const auto& r : data.rh) {
        const std::string id = "r_h(k=" + std::to_string(r.k) + ",h=" + std::to_string(r.h) + ")";
        if (!r.error.empty()) {
            c.details.push_back(id + ": " + r.error);
            continue;
        }
        if (!r.complete)
            c.details.push_back(id + ": not complete");
        if (r.h2 < r.bound)
            c.details.push_back(id + ": dim H^2 = " + std::to_string(r.h2) + " < " +
                                std::to_string(r.bound));
        if (!r.phis_ok)
            for (const auto& note : r.phi_notes)
                c.details.push_back(id + ": " + note);
    }
    c.pass = c.details.empty();
    return c;
}

CriterionResult criterion_filiform(const SuiteData& data) {
    CriterionResult c{6, "filiform certificates: characteristic sequence (n-1,1) at the "
                         "certified vector (Y1 for L_n and A_n^k)", true, {}};
    for (const auto& r : data.records) {
        if (!is_family(r.family))
            continue;
        if (!r.error.empty()) {
            c.details.push_back(r.id + ": " + r.error);
            continue;
        }
        if (!r.filiform) {
            c.details.push_back(r.id + ": no characteristic vector certified");
            continue;
        }
        const std::vector<std::size_t> expect{r.dim - 1, 1};
        if (r.char_seq != expect)
            c.details.push_back(r.id + ": certified sequence is not (n-1,1)");
        if (r.family == 'L' || r.family == 'A') {
            VectorQ y1(r.dim);
            y1[0] = Rational(1);
            if (r.witness != y1)
                c.details.push_back(r.id + ": certified vector is not Y1");
            if (r.char_seq_y1 != expect)
                c.details.push_back(r.id + ": sequence at Y1 is not (n-1,1)");
        }
    }
    c.pass = c.details.empty();
    return c;
}

LieAlgebra basis_change(const LieAlgebra& g, const MatrixQ& p, const MatrixQ& pinv) {
    const std::uint32_t n = static_cast<std::uint32_t>(g.dim());
    BracketTable table;
    for (std::uint32_t a = 0; a < n; ++a)
        for (std::uint32_t b = a + 1; b < n; ++b) {
            const VectorQ img = g.bracket(p.col(a), p.col(b));
            const VectorQ coords = pinv * img;
            if (!vq_is_zero(coords))
                table[{a, b}] = coords;
        }
    return LieAlgebra::create(n, {}, std::move(table));
}

std::vector<LieAlgebra> random_dim3_algebras(std::size_t count) {
    std::vector<LieAlgebra> seeds;
    seeds.push_back(LieAlgebra::create(3, {}, {}));  // abelian
    seeds.push_back(heisenberg());
    {
        BracketTable t;  // r2 + center
        VectorQ v(3);
        v[1] = Rational(1);
        t[{0, 1}] = v;
        seeds.push_back(LieAlgebra::create(3, {}, std::move(t)));
    }
    {
        BracketTable t;  // sl2-type: [e1,e2] = 2e2, [e1,e3] = -2e3, [e2,e3] = e1
        VectorQ a(3), b(3), c(3);
        a[1] = Rational(2);
        b[2] = Rational(-2);
        c[0] = Rational(1);
        t[{0, 1}] = a;
        t[{0, 2}] = b;
        t[{1, 2}] = c;
        seeds.push_back(LieAlgebra::create(3, {}, std::move(t)));
    }
    std::mt19937 rng(20240811u);
    std::uniform_int_distribution<int> pick_index(0, 2);
    std::uniform_int_distribution<int> pick_coeff(1, 4);  // maps to {-2,-1,1,2}
    std::vector<LieAlgebra> out;
    for (std::size_t i = 0; i < count; ++i) {
        const LieAlgebra& base = seeds[i % seeds.size()];
        MatrixQ p = MatrixQ::identity(3), pinv = MatrixQ::identity(3);
        for (int shear = 0; shear < 4; ++shear) {
            int a = pick_index(rng), b = pick_index(rng);
            if (a == b)
                b = (b + 1) % 3;
            const int cval = pick_coeff(rng);
            const Rational cr(cval <= 2 ? cval - 3 : cval - 2);  // -2,-1,1,2
            MatrixQ s = MatrixQ::identity(3), sinv = MatrixQ::identity(3);
            s.at(a, b) = cr;
            sinv.at(a, b) = -cr;
            p = p * s;
            pinv = sinv * pinv;
        }
        out.push_back(basis_change(base, p, pinv));
    }
    return out;
}

CriterionResult criterion_oracle(const SuiteData&) {
    CriterionResult c{7, "oracle equivalence at dim <= 4 plus 20 random dim-3 algebras", true, {}};
    std::vector<std::pair<std::string, LieAlgebra>> items;
    items.emplace_back("heisenberg", heisenberg());
    items.emplace_back("r2", r2());
    items.emplace_back("L4", build_family({FamilySpec::Tag::L, 4, 0, 0, {}}));
    items.emplace_back("Q4", build_family({FamilySpec::Tag::Q, 4, 0, 0, {}}));
    const auto randoms = random_dim3_algebras(20);
    for (std::size_t i = 0; i < randoms.size(); ++i)
        items.emplace_back("random" + std::to_string(i), randoms[i]);
    for (const auto& [id, g] : items) {
        if (!jacobi_check(g).empty()) {
            c.details.push_back(id + ": Jacobi check failed");
            continue;
        }
        for (std::size_t p = 0; p <= 2; ++p) {
            const auto main_dims = cohomology_dims(g, p);
            const auto ref = bruteforce::cohomology_dims(g, p);
            if (main_dims.dim_cochains != ref.dim_cochains ||
                main_dims.dim_cocycles != ref.dim_cocycles ||
                main_dims.dim_coboundaries != ref.dim_coboundaries ||
                main_dims.dim_cohomology != ref.dim_cohomology)
                c.details.push_back(id + ": dimension mismatch against the oracle at p = " +
                                    std::to_string(p));
        }
        const std::size_t h0 = cohomology_dims(g, 0).dim_cohomology;
        const std::size_t h1 = cohomology_dims(g, 1).dim_cohomology;
        if (h0 != center(g).dim())
            c.details.push_back(id + ": dim H^0 != dim center");
        if (h1 != derivation_basis(g).dim() - inner_basis(g).dim())
            c.details.push_back(id + ": dim H^1 != dim Der - dim Inner");
    }
    c.pass = c.details.empty();
    return c;
}

CriterionResult criterion_fixtures(const SuiteData&) {
    CriterionResult c{8, "fixtures: dim Der(L4) = 7, dim H^1(L4) = 4, dim Der(heisenberg) = 6, "
                         "r2 complete", true, {}};
    const LieAlgebra l4 = build_family({FamilySpec::Tag::L, 4, 0, 0, {}});
    const LieAlgebra heis = heisenberg();
    const LieAlgebra r = r2();
    auto expect = [&](bool ok, const std::string& msg) {
        if (!ok)
            c.details.push_back(msg);
    };
    expect(derivation_basis(l4).dim() == 7, "dim Der(L4) != 7");
    expect(bruteforce::cohomology_dims(l4, 1).dim_cocycles == 7, "oracle Z^1(L4) != 7");
    expect(cohomology_dims(l4, 1).dim_cohomology == 4, "dim H^1(L4) != 4");
    expect(bruteforce::cohomology_dims(l4, 1).dim_cohomology == 4, "oracle H^1(L4) != 4");
    expect(derivation_basis(heis).dim() == 6, "dim Der(heisenberg) != 6");
    expect(bruteforce::cohomology_dims(heis, 1).dim_cocycles == 6, "oracle Z^1(heisenberg) != 6");
    expect(is_complete(r).complete, "r2 not complete");
    expect(bruteforce::cohomology_dims(r, 0).dim_cohomology == 0, "oracle H^0(r2) != 0");
    expect(bruteforce::cohomology_dims(r, 1).dim_cohomology == 0, "oracle H^1(r2) != 0");
    c.pass = c.details.empty();
    return c;
}

}  // namespace

ReproduceResult reproduce_paper(unsigned jobs) {
    if (jobs == 0)
        jobs = 1;
    // main pass, plus a second pass at a different thread count for the
    // determinism criterion
    SuiteData suite = build_suite(jobs);
    const SuiteData alt = build_suite(jobs == 1 ? 2 : 1);
    const bool deterministic = suite_body(suite).dump(2) == suite_body(alt).dump(2);

    std::vector<CriterionResult> criteria;
    criteria.push_back(criterion_deltasq(suite));
    criteria.push_back(criterion_z1_der(suite));
    criteria.push_back(criterion_rank(suite));
    criteria.push_back(criterion_complete(suite));
    criteria.push_back(criterion_h2(suite));
    criteria.push_back(criterion_filiform(suite));
    criteria.push_back(criterion_oracle(suite));
    criteria.push_back(criterion_fixtures(suite));
    CriterionResult det{9, "determinism: byte-identical report across runs and thread counts",
                        deterministic, {}};
    if (!deterministic)
        det.details.push_back("reports from thread counts differ");
    criteria.push_back(det);

    ReproduceResult res;
    res.all_pass = true;
    for (const auto& c : criteria)
        res.all_pass = res.all_pass && c.pass;
    res.criteria = criteria;

    json report;
    report["tool"] = "liecoh";
    report["suite"] = "reproduce-paper";
    json body = suite_body(suite);
    for (auto& [key, value] : body.items())
        report[key] = value;
    json crits = json::array();
    for (const auto& c : criteria) {
        json rec;
        rec["id"] = c.id;
        rec["name"] = c.name;
        rec["pass"] = c.pass;
        rec["details"] = c.details;
        crits.push_back(std::move(rec));
    }
    report["criteria"] = std::move(crits);
    report["all_pass"] = res.all_pass;
    res.report_json = report.dump(2) + "\n";
    return res;
}

}  // namespace liecoh
