#include "rpart/part_set.hpp"

#include <charconv>
#include <fstream>
#include <limits>

namespace rpart {

namespace {

std::uint64_t parse_u64(std::string_view text, std::string_view what)
{
    std::uint64_t v = 0;
    auto const* end = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(text.data(), end, v);
    if (text.empty() || ec != std::errc() || ptr != end)
        throw input_error(std::string(what) + ": not a nonnegative 64-bit integer: '" +
                          std::string(text) + "'");
    return v;
}

void validate_increasing(const std::vector<std::uint64_t>& parts, std::string_view origin)
{
    if (parts.empty())
        throw input_error(std::string(origin) + ": part set is empty");
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] == 0)
            throw input_error(std::string(origin) + ": parts must be positive (element " +
                              std::to_string(i + 1) + " is 0)");
        if (i > 0 && parts[i] <= parts[i - 1])
            throw input_error(std::string(origin) + ": parts must be strictly increasing (" +
                              std::to_string(parts[i - 1]) + " then " +
                              std::to_string(parts[i]) + ")");
    }
}

} // namespace

PartSet PartSet::powers(std::uint64_t q)
{
    if (q < 2)
        throw input_error("powers:<q> needs q >= 2");
    PartSet s;
    s.kind_ = Kind::powers;
    s.q_ = q;
    return s;
}

PartSet PartSet::list(std::vector<std::uint64_t> parts)
{
    validate_increasing(parts, "list");
    PartSet s;
    s.kind_ = Kind::list;
    s.parts_ = std::move(parts);
    return s;
}

PartSet PartSet::file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw input_error("file:" + path + ": cannot open");

    std::vector<std::uint64_t> parts;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        parts.push_back(parse_u64(line, "file:" + path + " line " + std::to_string(lineno)));
    }
    validate_increasing(parts, "file:" + path);

    PartSet s;
    s.kind_ = Kind::file;
    s.parts_ = std::move(parts);
    s.path_ = path;
    return s;
}

PartSet PartSet::parse(const std::string& descriptor)
{
    auto const colon = descriptor.find(':');
    if (colon == std::string::npos)
        throw input_error("set descriptor must be powers:<q>, list:<a1>,... or file:<path>; got '" +
                          descriptor + "'");
    auto const tag = descriptor.substr(0, colon);
    auto const body = std::string_view(descriptor).substr(colon + 1);

    if (tag == "powers")
        return powers(parse_u64(body, "powers"));
    if (tag == "list") {
        std::vector<std::uint64_t> parts;
        std::size_t start = 0;
        while (true) {
            auto const comma = body.find(',', start);
            parts.push_back(parse_u64(body.substr(start, comma - start), "list"));
            if (comma == std::string_view::npos)
                break;
            start = comma + 1;
        }
        return list(std::move(parts));
    }
    if (tag == "file")
        return file(std::string(body));
    throw input_error("unknown set kind '" + tag + "'");
}

std::string PartSet::descriptor() const
{
    switch (kind_) {
    case Kind::powers:
        return "powers:" + std::to_string(q_);
    case Kind::file:
        return "file:" + path_;
    case Kind::list:
        break;
    }
    std::string out = "list:";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i)
            out += ',';
        out += std::to_string(parts_[i]);
    }
    return out;
}

std::vector<std::uint64_t> PartSet::parts_up_to(std::uint64_t bound) const
{
    std::vector<std::uint64_t> out;
    if (kind_ != Kind::powers) {
        for (auto a : parts_) {
            if (a > bound)
                break;
            out.push_back(a);
        }
        return out;
    }
    std::uint64_t a = 1;
    while (a <= bound) {
        out.push_back(a);
        if (a > std::numeric_limits<std::uint64_t>::max() / q_)
            break;
        a *= q_;
    }
    return out;
}

std::vector<Count> PartSet::first(std::size_t k) const
{
    std::vector<Count> out;
    if (kind_ != Kind::powers) {
        for (std::size_t i = 0; i < k && i < parts_.size(); ++i)
            out.emplace_back(parts_[i]);
        return out;
    }
    Count a = 1;
    for (std::size_t i = 0; i < k; ++i) {
        out.push_back(a);
        a *= q_;
    }
    return out;
}

} // namespace rpart
