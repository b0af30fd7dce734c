#include "cwpd/pm_lattice.hpp"

#include <charconv>
#include <stdexcept>

namespace cwpd::pm {

PointLabel PointLabel::p(std::uint32_t n, std::uint32_t index) {
    if (n < 2) throw std::invalid_argument("P label needs n >= 2");
    return {Family::P, index, n, 0};
}

PointLabel PointLabel::q(std::uint32_t n, std::uint32_t index) {
    if (n < 2) throw std::invalid_argument("Q label needs n >= 2");
    return {Family::Q, index, n, 0};
}

PointLabel PointLabel::anonymous(std::uint32_t id) { return {Family::Anonymous, 0, 0, id}; }

std::string PointLabel::to_string() const {
    switch (family_) {
        case Family::P:
            return "p" + std::to_string(index_) + "@n" + std::to_string(context_n_);
        case Family::Q:
            return "q" + std::to_string(index_) + "@n" + std::to_string(context_n_);
        case Family::Anonymous:
            break;
    }
    return "a" + std::to_string(anon_id_);
}

namespace {

std::uint32_t parse_u32(std::string_view s, std::string_view whole) {
    std::uint32_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size())
        throw std::invalid_argument("malformed point label: '" + std::string(whole) + "'");
    return v;
}

}  // namespace

PointLabel PointLabel::parse(std::string_view text) {
    if (text.size() < 2) throw std::invalid_argument("malformed point label: '" + std::string(text) + "'");
    const char head = text.front();
    if (head == 'a') return anonymous(parse_u32(text.substr(1), text));
    if (head != 'p' && head != 'q')
        throw std::invalid_argument("malformed point label: '" + std::string(text) + "'");
    const auto at = text.find("@n");
    if (at == std::string_view::npos)
        throw std::invalid_argument("point label lacks '@n<context>': '" + std::string(text) + "'");
    const auto index = parse_u32(text.substr(1, at - 1), text);
    const auto n = parse_u32(text.substr(at + 2), text);
    return head == 'p' ? p(n, index) : q(n, index);
}

bool is_unit_timelike(const PMClass& c) { return intersect(c, c) == 1 && sgn(c.ell_coeff()) > 0; }

RealClass to_real(const PMClass& c) {
    RealClass out = RealClass::ell(c.ell_coeff().get_d());
    for (const auto& [label, v] : c.exc()) out.add_exc(label, v.get_d());
    return out;
}

nlohmann::ordered_json to_json(const PMClass& c) {
    nlohmann::ordered_json j;
    j["ell"] = format_rational(c.ell_coeff());
    auto exc = nlohmann::ordered_json::array();
    for (const auto& [label, v] : c.exc())
        exc.push_back({{"label", label.to_string()}, {"coeff", format_rational(v)}});
    j["exc"] = std::move(exc);
    return j;
}

PMClass pm_class_from_json(const nlohmann::ordered_json& j) {
    if (!j.is_object() || !j.contains("ell") || !j.contains("exc") || !j["exc"].is_array())
        throw std::invalid_argument("class JSON needs 'ell' and an 'exc' array");
    PMClass c = PMClass::ell(parse_rational(j["ell"].get<std::string>()));
    for (const auto& entry : j["exc"]) {
        const auto label = PointLabel::parse(entry.at("label").get<std::string>());
        if (c.exc().contains(label))
            throw std::invalid_argument("duplicate label " + label.to_string());
        c.add_exc(label, parse_rational(entry.at("coeff").get<std::string>()));
    }
    return c;
}

}  // namespace cwpd::pm
