#include "presentation.hpp"

#include <algorithm>
#include <array>
#include <sstream>

namespace hfree {

namespace {

constexpr std::string_view kG12 = R"(# G12, parabolic of type A1
group G12
gens 3
subgroup 1
rel 1231 = 2312
rel 1231 = 3123
)";

constexpr std::string_view kG22 = R"(# G22, parabolic of type A1
group G22
gens 3
subgroup 1
rel 12312 = 23123
rel 23123 = 31231
rel 12312 = 31231
)";

constexpr std::string_view kG24 = R"(# G24, parabolic of type B2
group G24
gens 3
subgroup 2 3
rel 121 = 212
rel 131 = 313
rel 2323 = 3232
rel 12312313' = 232'12312
)";

constexpr std::string_view kG27 = R"(# G27, parabolic of type B2
group G27
gens 3
subgroup 2 3
rel 121 = 212
rel 131 = 313
rel 3232 = 2323
rel 232'1231231 = 12312313'23
)";

constexpr std::string_view kG29 = R"(# G29, parabolic of type B3
group G29
gens 4
subgroup 1 2 3
rel 121 = 212
rel 242 = 424
rel 343 = 434
rel 2323 = 3232
rel 13 = 31
rel 14 = 41
rel 432432 = 324324
# holds in B; its image 423423 = 234234 holds in W only
check 42'34'23' = 2'34'23'4
)";

constexpr std::string_view kG31 = R"(# G31, parabolic of type A3
group G31
gens 5
subgroup 2 4 5
rel 141 = 414
rel 15 = 51
rel 242 = 424
rel 252 = 525
rel 34 = 43
rel 535 = 353
rel 45 = 54
rel 123 = 231
rel 231 = 312
rel 123 = 312
# additional relations
rel 124124 = 412412
rel 235235 = 523523
rel 232'523 = 5232'52
rel 1242'12 = 242'124
rel 212'5235 = 52352'12
rel 232'4124 = 41242'32
)";

constexpr std::string_view kG33A4 = R"(# G33, parabolic of type A4
group G33A4
gens 5
subgroup 1 2 4 5
rel 121 = 212
rel 323 = 232
rel 424 = 242
rel 434 = 343
rel 454 = 545
rel 13 = 31
rel 14 = 41
rel 15 = 51
rel 25 = 52
rel 35 = 53
rel 423423 = 342342
rel 342342 = 234234
)";

constexpr std::string_view kG33D4 = R"(# G33, alternative presentation, parabolic of type D4
group G33D4
gens 5
subgroup 1 2 3 5
rel 121 = 212
rel 454 = 545
rel 13 = 31
rel 14 = 41
rel 15 = 51
rel 232 = 323
rel 242 = 424
rel 252 = 525
rel 343 = 434
rel 35 = 53
rel 543254 = 432543
# additional relations
rel 324324 = 432432
rel 324324 = 243243
rel 432432 = 243243
rel 4215421 = 252'421542
rel 425432 = 32543245'
)";

struct CatalogEntry {
  std::string_view name;
  std::string_view text;
  CatalogSizes sizes;
};

constexpr std::array<CatalogEntry, 8> kCatalog{{
    {"G12", kG12, {48, 24, 2}},
    {"G22", kG22, {240, 120, 2}},
    {"G24", kG24, {336, 42, 8}},
    {"G27", kG27, {2160, 270, 8}},
    {"G29", kG29, {7680, 160, 48}},
    {"G31", kG31, {46080, 1920, 24}},
    {"G33A4", kG33A4, {51840, 432, 120}},
    {"G33D4", kG33D4, {51840, 270, 192}},
}};

const CatalogEntry& find_entry(std::string_view name) {
  for (const auto& e : kCatalog) {
    if (e.name == name) return e;
  }
  throw UnknownCase("unknown case '" + std::string(name) + "'");
}

std::string_view trim(std::string_view s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

Relation parse_relation(std::string_view body, int line) {
  auto eq = body.find('=');
  if (eq == std::string_view::npos) {
    throw PresentationError("line " + std::to_string(line) +
                            ": relation needs '='");
  }
  try {
    return {parse_word(trim(body.substr(0, eq))),
            parse_word(trim(body.substr(eq + 1)))};
  } catch (const SyntaxError& e) {
    throw PresentationError("line " + std::to_string(line) + ": " + e.what());
  }
}

void check_letters(const Word& w, int ngens) {
  if (w.max_gen() > ngens) {
    throw PresentationError("letter " + std::to_string(w.max_gen()) +
                            " exceeds generator count " +
                            std::to_string(ngens));
  }
}

}  // namespace

std::vector<Relation> Presentation::restricted_to(
    const std::vector<int>& gens) const {
  auto inside = [&](const Word& w) {
    return std::all_of(w.begin(), w.end(), [&](Letter l) {
      return std::find(gens.begin(), gens.end(), l.gen) != gens.end();
    });
  };
  std::vector<Relation> out;
  for (const auto& r : relations) {
    if (inside(r.lhs) && inside(r.rhs)) out.push_back(r);
  }
  return out;
}

void Presentation::validate() const {
  if (ngens < 1 || ngens > 9) {
    throw PresentationError("generator count must be in 1..9");
  }
  for (const auto& r : relations) {
    check_letters(r.lhs, ngens);
    check_letters(r.rhs, ngens);
  }
  for (const auto& r : checks) {
    check_letters(r.lhs, ngens);
    check_letters(r.rhs, ngens);
  }
  for (int g : default_subgroup) {
    if (g < 1 || g > ngens) {
      throw PresentationError("subgroup generator out of range");
    }
  }
}

std::string_view to_string(OrderMode m) {
  return m == OrderMode::lex ? "lex" : "dc";
}

OrderMode parse_order_mode(std::string_view s) {
  if (s == "lex") return OrderMode::lex;
  if (s == "dc") return OrderMode::dc;
  throw std::invalid_argument("order mode must be 'lex' or 'dc'");
}

void CaseSpec::validate(int ngens) const {
  if (subgroup.empty() || static_cast<int>(subgroup.size()) >= ngens) {
    throw std::invalid_argument("subgroup must be a proper nonempty subset");
  }
  for (std::size_t i = 0; i < subgroup.size(); ++i) {
    if (subgroup[i] < 1 || subgroup[i] > ngens ||
        (i > 0 && subgroup[i] <= subgroup[i - 1])) {
      throw std::invalid_argument("subgroup must list distinct generators");
    }
  }
  std::vector<int> sorted = shat;
  std::sort(sorted.begin(), sorted.end());
  if (static_cast<int>(sorted.size()) != ngens) {
    throw std::invalid_argument("ordering must list every generator once");
  }
  for (int i = 0; i < ngens; ++i) {
    if (sorted[i] != i + 1) {
      throw std::invalid_argument("ordering must list every generator once");
    }
  }
}

std::string CaseSpec::ordering_label() const {
  std::string s(1, mode == OrderMode::lex ? '(' : '[');
  for (std::size_t i = 0; i < shat.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(shat[i]);
    if (std::binary_search(subgroup.begin(), subgroup.end(), shat[i])) s += '*';
  }
  s += mode == OrderMode::lex ? ')' : ']';
  return s;
}

std::vector<int> parse_digit_list(std::string_view text) {
  std::vector<int> out;
  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (c >= '1' && c <= '9') {
      out.push_back(c - '0');
    } else if (c != ',' && c != ' ') {
      throw PresentationError("bad generator list '" + std::string(text) +
                              "'");
    }
  }
  return out;
}

Presentation parse_presentation(std::string_view text) {
  Presentation p;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view line = text.substr(pos, nl - pos);
    pos = nl + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = trim(line);
    if (line.empty()) continue;

    auto sp = line.find_first_of(" \t");
    std::string_view key = line.substr(0, sp);
    std::string_view rest =
        sp == std::string_view::npos ? std::string_view{} : trim(line.substr(sp));
    if (key == "group") {
      p.name = std::string(rest);
    } else if (key == "gens") {
      try {
        p.ngens = std::stoi(std::string(rest));
      } catch (const std::exception&) {
        throw PresentationError("line " + std::to_string(line_no) +
                                ": bad generator count");
      }
    } else if (key == "subgroup") {
      p.default_subgroup = parse_digit_list(rest);
      std::sort(p.default_subgroup.begin(), p.default_subgroup.end());
    } else if (key == "rel") {
      p.relations.push_back(parse_relation(rest, line_no));
    } else if (key == "check") {
      p.checks.push_back(parse_relation(rest, line_no));
    } else {
      throw PresentationError("line " + std::to_string(line_no) +
                              ": unknown directive '" + std::string(key) +
                              "'");
    }
  }
  p.validate();
  return p;
}

std::string print_presentation(const Presentation& p) {
  std::ostringstream os;
  os << "group " << p.name << "\ngens " << p.ngens << "\n";
  if (!p.default_subgroup.empty()) {
    os << "subgroup";
    for (int g : p.default_subgroup) os << ' ' << g;
    os << "\n";
  }
  for (const auto& r : p.relations) {
    os << "rel " << to_string(r.lhs) << " = " << to_string(r.rhs) << "\n";
  }
  for (const auto& r : p.checks) {
    os << "check " << to_string(r.lhs) << " = " << to_string(r.rhs) << "\n";
  }
  return os.str();
}

const std::vector<std::string>& catalog_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& e : kCatalog) v.emplace_back(e.name);
    return v;
  }();
  return names;
}

std::string_view catalog_text(std::string_view name) {
  return find_entry(name).text;
}

Presentation catalog(std::string_view name) {
  return parse_presentation(find_entry(name).text);
}

CatalogSizes catalog_sizes(std::string_view name) {
  return find_entry(name).sizes;
}

const std::vector<TableRow>& result_table() {
  static const std::vector<TableRow> rows = [] {
    std::vector<TableRow> v;
    auto add = [&](std::string g, std::vector<int> j, OrderMode m,
                   std::vector<int> shat, int missing, bool ext) {
      v.push_back({CaseSpec{std::move(g), std::move(j), m, std::move(shat)},
                   missing, ext});
    };
    using enum OrderMode;
    for (const char* g : {"G12", "G22"}) {
      bool is12 = std::string_view(g) == "G12";
      add(g, {1}, lex, {1, 2, 3}, 0, false);
      add(g, {2}, lex, {1, 2, 3}, 0, false);
      add(g, {3}, lex, {1, 2, 3}, 0, false);
      add(g, {1}, dc, {1, 2, 3}, is12 ? 0 : 25, false);
      add(g, {2}, dc, {1, 2, 3}, is12 ? 9 : 26, false);
      add(g, {3}, dc, {1, 2, 3}, is12 ? 0 : 25, false);
    }
    add("G24", {2, 3}, lex, {1, 2, 3}, 0, false);
    add("G24", {2, 3}, dc, {1, 2, 3}, 0, false);
    add("G27", {2, 3}, lex, {1, 2, 3}, 136, false);
    add("G27", {2, 3}, dc, {1, 2, 3}, 0, false);
    add("G29", {1, 2, 3}, lex, {1, 2, 3, 4}, 0, false);
    add("G29", {1, 2, 3}, dc, {1, 2, 3, 4}, 0, false);
    for (std::vector<int> shat : {std::vector<int>{1, 2, 3, 4, 5},
                                  {5, 1, 2, 3, 4},
                                  {4, 5, 1, 2, 3},
                                  {3, 4, 5, 1, 2},
                                  {2, 3, 4, 5, 1},
                                  {2, 4, 5, 1, 3},
                                  {2, 4, 5, 3, 1}}) {
      add("G31", {2, 4, 5}, lex, shat, 0, true);
    }
    add("G31", {2, 4, 5}, dc, {1, 2, 3, 4, 5}, 2633, true);
    add("G33A4", {1, 2, 4, 5}, lex, {1, 2, 3, 4, 5}, 0, true);
    add("G33D4", {1, 2, 3, 5}, lex, {1, 2, 3, 4, 5}, 0, true);
    add("G33D4", {1, 2, 3, 5}, dc, {1, 2, 3, 4, 5}, 0, true);
    return v;
  }();
  return rows;
}

}  // namespace hfree
