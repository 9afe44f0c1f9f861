#include "lcseq/family_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace lcseq::io {

using construct::BinSeq;
using construct::Family;
using construct::Representative;
using json = nlohmann::ordered_json;

std::string family_to_json(const Family& fam) {
    json j;
    j["schema_version"] = schema_version;
    j["p"] = fam.p;
    j["m"] = fam.m;
    j["field_modulus"] = fam.field_modulus;
    j["a_enc"] = fam.a.v;
    j["b_enc"] = fam.b.v;

    std::vector<int64_t> alphas;
    alphas.reserve(fam.alphas.size());
    for (const auto& a : fam.alphas)
        alphas.push_back(a.has_value() ? static_cast<int64_t>(a->v) : int64_t{-1});
    j["alphas"] = alphas;

    json reps = json::array();
    for (const auto& r : fam.reps) {
        json jr;
        jr["kind"] = r.kind == Representative::Kind::R1 ? "R1" : "R2";
        std::vector<uint32_t> num;
        for (const auto& c : r.fn.num.c) num.push_back(c.v);
        jr["num_coeffs"] = num;
        reps.push_back(std::move(jr));
    }
    j["representatives"] = std::move(reps);

    json seqs = json::array();
    for (const auto& s : fam.seqs) {
        std::vector<int> row(s.values.begin(), s.values.end());
        seqs.push_back(row);
    }
    j["sequences"] = std::move(seqs);

    return j.dump(2) + "\n";
}

namespace {

[[noreturn]] void malformed(const std::string& what) { fail(Errc::MalformedFile, what); }

uint64_t get_u64(const json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_number_unsigned()) malformed(std::string(key) + " missing or not an unsigned integer");
    return j[key].get<uint64_t>();
}

} // namespace

LoadedFamily family_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        malformed(std::string("JSON parse error: ") + e.what());
    }
    if (get_u64(j, "schema_version") != static_cast<uint64_t>(schema_version))
        malformed("unsupported schema_version");

    const uint64_t p = get_u64(j, "p");
    const uint32_t m = static_cast<uint32_t>(get_u64(j, "m"));
    if (!j.contains("field_modulus") || !j["field_modulus"].is_array())
        malformed("field_modulus missing");
    std::vector<uint32_t> modulus;
    for (const auto& c : j["field_modulus"]) {
        if (!c.is_number_unsigned()) malformed("field_modulus entries must be unsigned");
        modulus.push_back(c.get<uint32_t>());
    }

    gf::Field F = [&] {
        try {
            return gf::Field::make(p, m, modulus);
        } catch (const Error& e) {
            malformed(std::string("invalid field parameters: ") + e.what());
        }
    }();
    const uint64_t q = F.q();

    Family fam;
    fam.p = p;
    fam.m = m;
    fam.field_modulus = modulus;
    const uint64_t a_enc = get_u64(j, "a_enc"), b_enc = get_u64(j, "b_enc");
    if (a_enc >= q || b_enc >= q) malformed("a_enc/b_enc out of range");
    fam.a = gf::Fe{static_cast<uint32_t>(a_enc)};
    fam.b = gf::Fe{static_cast<uint32_t>(b_enc)};

    if (!j.contains("alphas") || !j["alphas"].is_array() || j["alphas"].size() != q + 1)
        malformed("alphas must have q + 1 entries");
    size_t idx = 0;
    for (const auto& av : j["alphas"]) {
        if (!av.is_number_integer()) malformed("alphas entries must be integers");
        const int64_t v = av.get<int64_t>();
        if (idx == 1) {
            if (v != -1) malformed("alphas[1] must be the -1 infinity sentinel");
            fam.alphas.push_back(std::nullopt);
        } else {
            if (v < 0 || static_cast<uint64_t>(v) >= q) malformed("alphas entry out of range");
            fam.alphas.push_back(gf::Fe{static_cast<uint32_t>(v)});
        }
        ++idx;
    }

    if (!j.contains("representatives") || !j["representatives"].is_array() ||
        j["representatives"].size() != q - 2)
        malformed("representatives must have q - 2 entries");
    int position = 1;
    for (const auto& jr : j["representatives"]) {
        if (!jr.contains("kind") || !jr["kind"].is_string() || !jr.contains("num_coeffs") ||
            !jr["num_coeffs"].is_array())
            malformed("representative fields missing");
        const std::string kind = jr["kind"].get<std::string>();
        if (kind != "R1" && kind != "R2") malformed("representative kind must be R1 or R2");
        std::vector<gf::Fe> num;
        for (const auto& c : jr["num_coeffs"]) {
            if (!c.is_number_unsigned() || c.get<uint64_t>() >= q)
                malformed("num_coeffs entry out of range");
            num.push_back(gf::Fe{c.get<uint32_t>()});
        }
        Representative r;
        r.kind = kind == "R1" ? Representative::Kind::R1 : Representative::Kind::R2;
        r.index = position++;
        r.fn = mobius::RationalFn{poly::Poly::from_coeffs(std::move(num)),
                                  poly::quadratic(F, fam.a, fam.b)};
        if (r.fn.num.is_zero() || r.fn.num.lead() != F.one()) malformed("numerator must be monic");
        fam.reps.push_back(std::move(r));
    }

    if (!j.contains("sequences") || !j["sequences"].is_array() || j["sequences"].size() != q - 2)
        malformed("sequences must have q - 2 rows");
    for (const auto& row : j["sequences"]) {
        if (!row.is_array() || row.size() != q + 1) malformed("sequence rows must have q + 1 entries");
        std::vector<int8_t> values;
        values.reserve(q + 1);
        for (const auto& e : row) {
            if (!e.is_number_integer()) malformed("sequence entries must be integers");
            const int64_t v = e.get<int64_t>();
            if (v != 1 && v != -1) malformed("sequence entries must be +-1");
            values.push_back(static_cast<int8_t>(v));
        }
        fam.seqs.push_back(BinSeq::from_values(std::move(values)));
    }

    return LoadedFamily{std::move(F), std::move(fam)};
}

std::string family_to_csv(const Family& fam) {
    std::ostringstream out;
    for (const auto& s : fam.seqs) {
        for (size_t i = 0; i < s.values.size(); ++i) {
            if (i) out << ',';
            out << static_cast<int>(s.values[i]);
        }
        out << '\n';
    }
    return out.str();
}

std::vector<BinSeq> sequences_from_csv(const std::string& text) {
    std::vector<BinSeq> seqs;
    std::istringstream in(text);
    std::string line;
    size_t width = 0;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::vector<int8_t> values;
        std::istringstream ls(line);
        std::string tok;
        while (std::getline(ls, tok, ',')) {
            if (tok == "1")
                values.push_back(1);
            else if (tok == "-1")
                values.push_back(-1);
            else
                malformed("CSV entries must be 1 or -1, got '" + tok + "'");
        }
        if (width == 0)
            width = values.size();
        else if (values.size() != width)
            malformed("CSV rows differ in length");
        seqs.push_back(BinSeq::from_values(std::move(values)));
    }
    if (seqs.empty()) malformed("CSV contains no sequences");
    return seqs;
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) fail(Errc::IoError, "cannot open for writing: " + path);
    out << content;
    if (!out) fail(Errc::IoError, "write failed: " + path);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(Errc::IoError, "cannot open for reading: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string report_to_json(const correlate::CorrelationReport& rep) {
    json j;
    j["n"] = rep.n;
    j["family_size"] = rep.family_size;
    j["cor"] = rep.cor;
    j["bound"] = rep.bound;
    j["within_bound"] = rep.within_bound;
    j["max_auto"] = {{"value", rep.max_auto.value}, {"i", rep.max_auto.i}, {"t", rep.max_auto.t}};
    if (rep.max_cross) {
        j["max_cross"] = {{"value", rep.max_cross->value},
                          {"i", rep.max_cross->i},
                          {"j", rep.max_cross->j},
                          {"t", rep.max_cross->t}};
    } else {
        j["max_cross"] = nullptr;
    }
    return j.dump(2) + "\n";
}

} // namespace lcseq::io
