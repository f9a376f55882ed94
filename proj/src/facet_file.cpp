#include "biercert/facet_file.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "biercert/errors.hpp"

namespace bier {

namespace {

std::string strip_comment(const std::string& line) {
    const auto pos = line.find('#');
    return pos == std::string::npos ? line : line.substr(0, pos);
}

bool blank(const std::string& s) {
    return s.find_first_not_of(" \t\r\n\v\f") == std::string::npos;
}

int parse_int(const std::string& token, int line_no) {
    int value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size())
        throw InputError("line " + std::to_string(line_no) + ": not an integer: '" + token + "'");
    return value;
}

}  // namespace

SimplicialComplex parse_facet_file(std::istream& in) {
    std::string line;
    int line_no = 0;
    bool saw_header = false;
    bool saw_any_content = false;
    int declared_n = 0;
    int max_label = 0;
    std::vector<std::vector<int>> facets;

    while (std::getline(in, line)) {
        ++line_no;
        const std::string body = strip_comment(line);
        if (blank(body)) continue;

        std::istringstream words(body);
        std::string first;
        words >> first;
        if (first == "vertices:") {
            if (saw_any_content)
                throw InputError("line " + std::to_string(line_no) +
                                 ": header allowed only before the first facet");
            std::string num;
            if (!(words >> num))
                throw InputError("line " + std::to_string(line_no) + ": header is missing the count");
            std::string extra;
            if (words >> extra)
                throw InputError("line " + std::to_string(line_no) + ": trailing tokens after header");
            declared_n = parse_int(num, line_no);
            if (declared_n < 1)
                throw InputError("line " + std::to_string(line_no) + ": vertex count must be positive");
            if (declared_n > FaceSet::max_vertices)
                throw InputError("line " + std::to_string(line_no) +
                                 ": vertex count exceeds the 63-vertex cap");
            saw_header = true;
            saw_any_content = true;
            continue;
        }

        saw_any_content = true;
        std::vector<int> labels;
        labels.push_back(parse_int(first, line_no));
        std::string token;
        while (words >> token) labels.push_back(parse_int(token, line_no));
        for (int v : labels) {
            if (v < 1)
                throw InputError("line " + std::to_string(line_no) +
                                 ": vertex labels are positive integers, got " + std::to_string(v));
            if (v > FaceSet::max_vertices)
                throw InputError("line " + std::to_string(line_no) + ": vertex label " +
                                 std::to_string(v) + " exceeds the 63-vertex cap");
            if (saw_header && v > declared_n)
                throw InputError("line " + std::to_string(line_no) + ": vertex label " +
                                 std::to_string(v) + " exceeds the declared count " +
                                 std::to_string(declared_n));
            max_label = std::max(max_label, v);
        }
        facets.push_back(std::move(labels));
    }

    if (!saw_any_content) throw InputError("empty input: no header and no facets");
    const int n = saw_header ? declared_n : max_label;
    if (facets.empty()) {
        // header-only file: the empty-only complex
        return SimplicialComplex::from_facets(n, {FaceSet{}});
    }
    return SimplicialComplex::from_vertex_lists(n, facets);
}

SimplicialComplex parse_facet_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open '" + path.string() + "'");
    return parse_facet_file(in);
}

SimplicialComplex parse_facet_string(std::string_view text) {
    std::istringstream in{std::string(text)};
    return parse_facet_file(in);
}

std::string to_facet_string(const SimplicialComplex& k) {
    if (k.kind() == ComplexKind::Void)
        throw InputError("the void complex has no facet-file representation");
    std::string out = "vertices: " + std::to_string(k.n()) + "\n";
    if (k.kind() == ComplexKind::EmptyOnly) {
        out += "# empty-only complex: the sole face is the empty set\n";
        return out;
    }
    for (FaceSet f : k.facets()) {
        bool first = true;
        for (int v : f.labels()) {
            if (!first) out += ' ';
            out += std::to_string(v);
            first = false;
        }
        out += '\n';
    }
    return out;
}

void write_facet_file(const SimplicialComplex& k, const std::filesystem::path& path) {
    const std::string text = to_facet_string(k);
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InputError("cannot write '" + path.string() + "'");
    out << text;
}

std::string input_digest(const SimplicialComplex& k) {
    // FNV-1a over a canonical description (covers all kinds, including void)
    std::string text = "vertices: " + std::to_string(k.n()) + "\nkind: " + to_string(k.kind()) + "\n";
    for (FaceSet f : k.facets()) {
        for (int v : f.labels()) text += std::to_string(v) + " ";
        text += '\n';
    }
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : text) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return std::string("fnv1a64:") + buf;
}

}  // namespace bier
