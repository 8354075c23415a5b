#include "mapforge/galois.hpp"

#include <algorithm>
#include <cstdio>
#include <map>

#include "mapforge/errors.hpp"

namespace mapforge {

namespace {

void append_type(std::string& out, const std::vector<int>& type) {
    out += '[';
    for (std::size_t i = 0; i < type.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(type[i]);
    }
    out += ']';
}

}  // namespace

std::string InvariantSignature::key() const {
    std::string k = "d" + std::to_string(degree) + ";s";
    append_type(k, sigma_type);
    k += ";a";
    append_type(k, alpha_type);
    k += ";f";
    append_type(k, phi_type);
    k += ";g" + std::to_string(genus);
    k += ";z" + std::to_string(center_rank);
    if (monodromy_order) k += ";m" + std::to_string(*monodromy_order);
    return k;
}

InvariantSignature signature(const Constellation& c) {
    require_valid(c);
    if (c.mode != MapMode::map)
        throw InvalidConstellationError("signature requires map mode");
    InvariantSignature s;
    Passport p = passport(c);
    s.degree = p.degree;
    s.sigma_type = p.sigma_type;
    s.alpha_type = p.alpha_type;
    s.phi_type = p.phi_type;
    s.genus = p.genus;
    s.center_rank = static_cast<int>(p.sigma_type.size());
    s.normalization_type = p.sigma_type;
    return s;
}

InvariantSignature signature_with_monodromy(const Constellation& c, std::uint64_t limit) {
    InvariantSignature s = signature(c);
    MonodromyOrder mono = monodromy_order(c, limit);
    if (!mono.exceeded) s.monodromy_order = mono.order;
    return s;
}

CompareResult compare(const Constellation& a, const Constellation& b) {
    if (signature(a) != signature(b)) return {OrbitVerdict::different_orbits, false};
    return {OrbitVerdict::invariant_equivalent, isomorphic(a, b)};
}

std::string canonical_hash(const Constellation& c) {
    const Constellation cf = canonical_form(c).constellation;
    std::uint64_t h = 1469598103934665603ull;
    auto mix = [&](std::uint64_t v) {
        h ^= v;
        h *= 1099511628211ull;
    };
    mix(static_cast<std::uint64_t>(cf.n_darts));
    for (const Permutation* p : {&cf.sigma, &cf.alpha, &cf.phi})
        for (Dart d : p->images()) mix(static_cast<std::uint64_t>(d));
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

ClassificationReport classify_batch(const std::vector<Constellation>& cs) {
    struct ClassData {
        Constellation canonical;
        std::string hash;
        std::vector<int> members;
    };
    struct BucketData {
        InvariantSignature sig;
        std::vector<ClassData> classes;
    };
    std::map<std::string, BucketData> buckets;

    for (std::size_t i = 0; i < cs.size(); ++i) {
        InvariantSignature sig = signature(cs[i]);
        Constellation canon = canonical_form(cs[i]).constellation;
        auto [it, inserted] = buckets.try_emplace(sig.key());
        if (inserted) it->second.sig = sig;
        bool placed = false;
        for (ClassData& cls : it->second.classes) {
            if (cls.canonical.sigma == canon.sigma && cls.canonical.alpha == canon.alpha &&
                cls.canonical.phi == canon.phi) {
                cls.members.push_back(static_cast<int>(i));
                placed = true;
                break;
            }
        }
        if (!placed) {
            ClassData cls;
            cls.hash = canonical_hash(cs[i]);
            cls.canonical = std::move(canon);
            cls.members = {static_cast<int>(i)};
            it->second.classes.push_back(std::move(cls));
        }
    }

    ClassificationReport report;
    for (auto& [key, data] : buckets) {
        std::sort(data.classes.begin(), data.classes.end(),
                  [](const ClassData& a, const ClassData& b) {
                      if (auto cmp = a.canonical.sigma <=> b.canonical.sigma; cmp != 0)
                          return cmp < 0;
                      if (auto cmp = a.canonical.alpha <=> b.canonical.alpha; cmp != 0)
                          return cmp < 0;
                      return a.canonical.phi < b.canonical.phi;
                  });
        SignatureBucket bucket;
        bucket.signature = data.sig;
        for (ClassData& cls : data.classes)
            bucket.classes.push_back({cls.hash, std::move(cls.members)});
        report.buckets.push_back(std::move(bucket));
    }
    return report;
}

nlohmann::json signature_to_json(const InvariantSignature& s) {
    nlohmann::json j;
    j["degree"] = s.degree;
    j["sigma_type"] = s.sigma_type;
    j["alpha_type"] = s.alpha_type;
    j["phi_type"] = s.phi_type;
    j["genus"] = s.genus;
    j["center_rank"] = s.center_rank;
    j["normalization_type"] = s.normalization_type;
    if (s.monodromy_order) j["monodromy_order"] = *s.monodromy_order;
    return j;
}

nlohmann::json compare_to_json(const CompareResult& r) {
    nlohmann::json j;
    j["verdict"] = r.verdict == OrbitVerdict::different_orbits ? "different_orbits"
                                                               : "invariant_equivalent";
    if (r.verdict == OrbitVerdict::invariant_equivalent) j["isomorphic"] = r.isomorphic;
    return j;
}

nlohmann::json classification_to_json(const ClassificationReport& r) {
    nlohmann::json j;
    j["buckets"] = nlohmann::json::array();
    for (const auto& bucket : r.buckets) {
        nlohmann::json b;
        b["signature"] = signature_to_json(bucket.signature);
        b["classes"] = nlohmann::json::array();
        for (const auto& cls : bucket.classes)
            b["classes"].push_back({{"canonical_hash", cls.canonical_hash},
                                    {"members", cls.members}});
        j["buckets"].push_back(std::move(b));
    }
    return j;
}

std::string classification_to_text(const ClassificationReport& r) {
    std::string out;
    int bucket_no = 0;
    for (const auto& bucket : r.buckets) {
        out += "bucket " + std::to_string(++bucket_no) + ": " + bucket.signature.key() + "\n";
        int class_no = 0;
        for (const auto& cls : bucket.classes) {
            out += "  class " + std::to_string(++class_no) + " [" + cls.canonical_hash +
                   "]: members";
            for (int m : cls.members) out += " " + std::to_string(m);
            out += "\n";
        }
    }
    if (out.empty()) out = "empty batch\n";
    return out;
}

}  // namespace mapforge
