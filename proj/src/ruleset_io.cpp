#include "ruleset_io.hpp"

#include <algorithm>
#include <cstdio>
#include <optional>
#include <sstream>

namespace fie {

namespace {

struct Line {
    int number = 0;
    std::vector<std::string> tokens;
};

std::vector<Line> tokenize(const std::string& text) {
    std::vector<Line> lines;
    std::istringstream in(text);
    std::string raw;
    int number = 0;
    while (std::getline(in, raw)) {
        ++number;
        if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
        std::istringstream ls(raw);
        Line line{number, {}};
        std::string tok;
        while (ls >> tok) line.tokens.push_back(tok);
        if (!line.tokens.empty()) lines.push_back(std::move(line));
    }
    return lines;
}

int parse_int(const Line& line, const std::string& tok, const char* what) {
    size_t used = 0;
    int value = 0;
    try {
        value = std::stoi(tok, &used);
    } catch (const std::exception&) {
        throw ParseError(line.number, std::string(what) + " '" + tok + "' is not an integer");
    }
    if (used != tok.size())
        throw ParseError(line.number, std::string(what) + " '" + tok + "' is not an integer");
    return value;
}

std::vector<Grade> parse_grade_row(const Line& line, int universe) {
    int got = static_cast<int>(line.tokens.size()) - 1;
    if (got != universe)
        throw ParseError(line.number, "expected " + std::to_string(universe) + " grades, got " +
                                          std::to_string(got));
    std::vector<Grade> grades;
    grades.reserve(static_cast<size_t>(universe));
    for (size_t i = 1; i < line.tokens.size(); ++i) {
        int v = parse_int(line, line.tokens[i], "grade");
        if (v < 0 || v > Grade::kMax)
            throw ParseError(line.number,
                             "grade " + std::to_string(v) + " out of range 0.." +
                                 std::to_string(Grade::kMax));
        grades.push_back(Grade(v));
    }
    return grades;
}

}  // namespace

RuleSet parse_ruleset(const std::string& text) {
    std::vector<Line> lines = tokenize(text);

    std::optional<int> elements;
    int levels = Grade::kLevels;
    int antecedents = 1;

    size_t pos = 0;
    // Header directives, in any order, each at most once.
    bool saw_levels = false, saw_antecedents = false;
    for (; pos < lines.size(); ++pos) {
        const Line& line = lines[pos];
        const std::string& head = line.tokens[0];
        if (head == "rule") break;
        if (head == "elements" || head == "levels" || head == "antecedents") {
            if (line.tokens.size() != 2)
                throw ParseError(line.number, "'" + head + "' takes exactly one value");
            int v = parse_int(line, line.tokens[1], head.c_str());
            if (head == "elements") {
                if (elements) throw ParseError(line.number, "duplicate 'elements' directive");
                if (v < FuzzyVector::kMinUniverse || v > FuzzyVector::kMaxUniverse)
                    throw ParseError(line.number,
                                     "elements must be in " +
                                         std::to_string(FuzzyVector::kMinUniverse) + ".." +
                                         std::to_string(FuzzyVector::kMaxUniverse));
                elements = v;
            } else if (head == "levels") {
                if (saw_levels) throw ParseError(line.number, "duplicate 'levels' directive");
                if (v != Grade::kLevels)
                    throw ParseError(line.number,
                                     "levels must be " + std::to_string(Grade::kLevels));
                saw_levels = true;
                levels = v;
            } else {
                if (saw_antecedents)
                    throw ParseError(line.number, "duplicate 'antecedents' directive");
                if (v < 1) throw ParseError(line.number, "antecedents must be at least 1");
                saw_antecedents = true;
                antecedents = v;
            }
        } else {
            throw ParseError(line.number, "unknown directive '" + head + "'");
        }
    }
    (void)levels;
    if (!elements) {
        int at = lines.empty() ? 1 : (pos < lines.size() ? lines[pos].number : lines.back().number);
        throw ParseError(at, "missing 'elements' directive");
    }

    std::vector<Rule> rules;
    while (pos < lines.size()) {
        const Line& head = lines[pos];
        if (head.tokens[0] != "rule")
            throw ParseError(head.number, "expected 'rule', got '" + head.tokens[0] + "'");
        if (head.tokens.size() != 1)
            throw ParseError(head.number, "'rule' takes no arguments");
        ++pos;

        std::vector<FuzzyVector> ants;
        for (int k = 1; k <= antecedents; ++k) {
            std::string want = "A" + std::to_string(k);
            if (pos >= lines.size() || lines[pos].tokens[0] != want) {
                int at = pos < lines.size() ? lines[pos].number : head.number;
                throw ParseError(at, "rule block: expected '" + want + "' row");
            }
            ants.emplace_back(parse_grade_row(lines[pos], *elements));
            ++pos;
        }
        if (pos >= lines.size() || lines[pos].tokens[0] != "C") {
            int at = pos < lines.size() ? lines[pos].number : head.number;
            throw ParseError(at, "rule block missing 'C' row");
        }
        FuzzyVector consequent(parse_grade_row(lines[pos], *elements));
        ++pos;
        rules.push_back(Rule{std::move(ants), std::move(consequent)});
    }

    if (rules.empty()) {
        int at = lines.empty() ? 1 : lines.back().number;
        throw ParseError(at, "rule set has no rules");
    }
    return RuleSet(std::move(rules));
}

std::string serialize_ruleset(const RuleSet& rules) {
    std::ostringstream os;
    os << "elements " << rules.universe() << '\n';
    os << "levels " << Grade::kLevels << '\n';
    os << "antecedents " << rules.antecedent_count() << '\n';
    for (const Rule& rule : rules) {
        os << "rule\n";
        for (size_t k = 0; k < rule.antecedents.size(); ++k) {
            os << 'A' << k + 1;
            for (Grade g : rule.antecedents[k].grades()) os << ' ' << g.value();
            os << '\n';
        }
        os << 'C';
        for (Grade g : rule.consequent.grades()) os << ' ' << g.value();
        os << '\n';
    }
    return os.str();
}

std::vector<FuzzyVector> parse_observation(const std::string& text, int universe,
                                           int antecedent_count) {
    std::vector<Line> lines = tokenize(text);
    if (static_cast<int>(lines.size()) != antecedent_count) {
        int at = lines.empty() ? 1 : lines.back().number;
        throw ParseError(at, "expected " + std::to_string(antecedent_count) +
                                 " observation row(s), got " + std::to_string(lines.size()));
    }
    std::vector<FuzzyVector> rows;
    rows.reserve(lines.size());
    for (const Line& line : lines) {
        // Observation rows carry no label; give the row parser a dummy one.
        Line padded = line;
        padded.tokens.insert(padded.tokens.begin(), "O");
        rows.emplace_back(parse_grade_row(padded, universe));
    }
    return rows;
}

namespace {

constexpr char kMagic[4] = {'F', 'R', 'O', 'M'};
constexpr std::uint8_t kVersion = 1;

size_t module_bytes(int rule_count, int universe) {
    long bits = static_cast<long>(rule_count) * universe * Grade::kBits;
    return static_cast<size_t>((bits + 7) / 8);
}

void pack_module(const RomImage& image, RomModule m, std::vector<std::uint8_t>& out) {
    size_t nbytes = module_bytes(image.rule_count(), image.universe());
    size_t base = out.size();
    out.resize(base + nbytes, 0);
    for (long i = 0; i < image.module_bits(); ++i) {
        if (image.bit(m, i))
            out[base + static_cast<size_t>(i / 8)] |= static_cast<std::uint8_t>(0x80u >> (i % 8));
    }
}

void unpack_module(const std::vector<std::uint8_t>& bytes, size_t base, RomImage& image,
                   RomModule m) {
    for (long i = 0; i < image.module_bits(); ++i) {
        bool v = (bytes[base + static_cast<size_t>(i / 8)] >> (7 - i % 8)) & 1;
        image.set_bit(m, i, v);
    }
}

}  // namespace

std::vector<std::uint8_t> rom_dump(const RomImage& image) {
    std::vector<std::uint8_t> out;
    out.reserve(9 + 2 * module_bytes(image.rule_count(), image.universe()));
    out.insert(out.end(), kMagic, kMagic + 4);
    out.push_back(kVersion);
    out.push_back(static_cast<std::uint8_t>(image.rule_count() >> 8));
    out.push_back(static_cast<std::uint8_t>(image.rule_count() & 0xff));
    out.push_back(static_cast<std::uint8_t>(image.universe() >> 8));
    out.push_back(static_cast<std::uint8_t>(image.universe() & 0xff));
    pack_module(image, RomModule::Antecedent, out);
    pack_module(image, RomModule::Conclusion, out);
    return out;
}

RomImage rom_load(const std::vector<std::uint8_t>& bytes) {
    if (bytes.size() < 9) throw Error(Errc::parse, "ROM container truncated before header");
    if (!std::equal(kMagic, kMagic + 4, bytes.begin()))
        throw Error(Errc::parse, "bad ROM container magic");
    if (bytes[4] != kVersion)
        throw Error(Errc::parse,
                    "unsupported ROM container version " + std::to_string(int(bytes[4])));
    int rule_count = (int(bytes[5]) << 8) | int(bytes[6]);
    int universe = (int(bytes[7]) << 8) | int(bytes[8]);
    if (rule_count < 1) throw Error(Errc::parse, "ROM container declares no rules");
    if (universe < FuzzyVector::kMinUniverse || universe > FuzzyVector::kMaxUniverse)
        throw Error(Errc::parse,
                    "ROM container declares unusable element count " + std::to_string(universe));
    size_t per_module = module_bytes(rule_count, universe);
    size_t expect = 9 + 2 * per_module;
    if (bytes.size() < expect)
        throw Error(Errc::parse, "ROM container truncated: expected " + std::to_string(expect) +
                                     " bytes, got " + std::to_string(bytes.size()));
    if (bytes.size() > expect)
        throw Error(Errc::parse, "ROM container has " +
                                     std::to_string(bytes.size() - expect) +
                                     " trailing byte(s) beyond the declared payload");
    RomImage image(rule_count, universe);
    unpack_module(bytes, 9, image, RomModule::Antecedent);
    unpack_module(bytes, 9 + per_module, image, RomModule::Conclusion);
    return image;
}

std::string read_file(const std::string& path) {
    std::FILE* f = std::fopen(path.c_str(), "rb");
    if (!f) throw Error(Errc::io, "cannot open '" + path + "' for reading");
    std::string data;
    char buf[4096];
    size_t n;
    while ((n = std::fread(buf, 1, sizeof buf, f)) > 0) data.append(buf, n);
    bool bad = std::ferror(f) != 0;
    std::fclose(f);
    if (bad) throw Error(Errc::io, "read failure on '" + path + "'");
    return data;
}

namespace {

void write_bytes(const std::string& path, const void* data, size_t size) {
    std::FILE* f = std::fopen(path.c_str(), "wb");
    if (!f) throw Error(Errc::io, "cannot open '" + path + "' for writing");
    size_t n = std::fwrite(data, 1, size, f);
    bool bad = n != size || std::fclose(f) != 0;
    if (bad) throw Error(Errc::io, "write failure on '" + path + "'");
}

}  // namespace

void write_file(const std::string& path, const std::string& data) {
    write_bytes(path, data.data(), data.size());
}

void write_file(const std::string& path, const std::vector<std::uint8_t>& data) {
    write_bytes(path, data.data(), data.size());
}

}  // namespace fie
