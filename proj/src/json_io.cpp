#include "gray2/json_io.hpp"

#include <sstream>
#include <stdexcept>

namespace gray2 {

using nlohmann::json;

namespace {

void expect(bool cond, const std::string& msg) {
  if (!cond) throw std::invalid_argument(msg);
}

int int_field(const json& j, const char* key) {
  expect(j.is_object() && j.contains(key),
         std::string("missing field \"") + key + "\"");
  const json& v = j.at(key);
  expect(v.is_number_integer(), std::string("field \"") + key + "\" must be an integer");
  return v.get<int>();
}

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  return out;
}

}  // namespace

json poset_to_json(const FinPoset& p) {
  json j;
  j["elements"] = p.labels();
  json covers = json::array();
  for (const auto& [a, b] : p.cover_relations()) covers.push_back(json::array({a, b}));
  j["covers"] = covers;
  return j;
}

json cat_to_json(const FinCat& c) {
  json j;
  j["objects"] = json::array();
  for (int o = 0; o < c.n_objects(); ++o) j["objects"].push_back(c.object_label(o));
  json mors = json::array();
  for (int m = 0; m < c.n_morphisms(); ++m)
    mors.push_back({{"src", c.src(m)}, {"tgt", c.tgt(m)}, {"label", c.mor_label(m)}});
  j["morphisms"] = mors;
  json ids = json::array();
  for (int o = 0; o < c.n_objects(); ++o) ids.push_back(c.identity(o));
  j["identities"] = ids;
  json comp = json::array();
  for (int f = 0; f < c.n_morphisms(); ++f)
    for (int g = 0; g < c.n_morphisms(); ++g)
      if (c.composable(f, g)) comp.push_back(json::array({f, g, c.then(f, g)}));
  j["composition"] = comp;
  return j;
}

json twocat_to_json(const TwoCat& t) {
  const int n = t.n_objects();
  json j;
  j["objects"] = json::array();
  for (int x = 0; x < n; ++x) j["objects"].push_back(t.object_label(x));
  json ids = json::array();
  for (int x = 0; x < n; ++x) ids.push_back(t.identity_cell(x));
  j["identities"] = ids;
  json homs = json::array();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      homs.push_back({{"src", x}, {"tgt", y}, {"cat", cat_to_json(t.hom(x, y))}});
  j["homs"] = homs;
  json hcomp = json::array();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        const FinCat& left = t.hom(x, y);
        const FinCat& right = t.hom(y, z);
        if (left.n_objects() == 0 || right.n_objects() == 0) continue;
        json obj = json::array();
        for (int f = 0; f < left.n_objects(); ++f)
          for (int g = 0; g < right.n_objects(); ++g)
            obj.push_back(t.hcomp_cell(x, y, z, f, g));
        json mor = json::array();
        for (int a = 0; a < left.n_morphisms(); ++a)
          for (int b = 0; b < right.n_morphisms(); ++b)
            mor.push_back(t.hcomp_2cell(x, y, z, a, b));
        hcomp.push_back(
            {{"x", x}, {"y", y}, {"z", z}, {"obj", obj}, {"mor", mor}});
      }
  j["hcomp"] = hcomp;
  return j;
}

json two_functor_to_json(const TwoFunctor& f) {
  const int n = f.src->n_objects();
  json j;
  j["omap"] = f.omap;
  json hmaps = json::array();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      const FinFunctor& h = f.hmap(x, y);
      if (h.src->n_objects() == 0) continue;
      hmaps.push_back({{"src", x}, {"tgt", y}, {"omap", h.omap}, {"mmap", h.mmap}});
    }
  j["hmaps"] = hmaps;
  return j;
}

json adjunction_to_json(const AdjunctionData& a) {
  return {{"obj_a", a.obj_a}, {"obj_b", a.obj_b}, {"l", a.l},
          {"r", a.r},         {"unit", a.unit},   {"counit", a.counit}};
}

json square_to_json(const Square2& s) {
  return {{"direction", s.direction == Square2::Dir::colax ? "colax" : "lax"},
          {"tl", s.tl},
          {"tr", s.tr},
          {"bl", s.bl},
          {"br", s.br},
          {"top", s.top},
          {"bottom", s.bottom},
          {"left", s.left},
          {"right", s.right},
          {"filler", s.filler}};
}

std::string poset_dot(const FinPoset& p) {
  std::ostringstream out;
  out << "digraph poset {\n  rankdir=BT;\n";
  for (int i = 0; i < p.size(); ++i)
    out << "  n" << i << " [label=\"" << dot_escape(p.label(i)) << "\"];\n";
  for (const auto& [a, b] : p.cover_relations()) out << "  n" << a << " -> n" << b << ";\n";
  out << "}\n";
  return out.str();
}

std::string cat_dot(const FinCat& c) {
  std::ostringstream out;
  out << "digraph category {\n";
  for (int o = 0; o < c.n_objects(); ++o)
    out << "  n" << o << " [label=\"" << dot_escape(c.object_label(o)) << "\"];\n";
  for (int m = 0; m < c.n_morphisms(); ++m) {
    if (c.is_identity(m)) continue;
    out << "  n" << c.src(m) << " -> n" << c.tgt(m) << " [label=\""
        << dot_escape(c.mor_label(m)) << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

std::string twocat_dot(const TwoCat& t) {
  std::ostringstream out;
  out << "digraph twocat {\n";
  for (int x = 0; x < t.n_objects(); ++x)
    out << "  n" << x << " [label=\"" << dot_escape(t.object_label(x)) << "\"];\n";
  for (int x = 0; x < t.n_objects(); ++x)
    for (int y = 0; y < t.n_objects(); ++y) {
      const FinCat& h = t.hom(x, y);
      for (int o = 0; o < h.n_objects(); ++o) {
        if (x == y && o == t.identity_cell(x)) continue;
        out << "  n" << x << " -> n" << y << " [label=\""
            << dot_escape(h.object_label(o)) << "\"];\n";
      }
    }
  out << "}\n";
  return out.str();
}

std::string poset_text(const FinPoset& p) {
  std::ostringstream out;
  out << p.size() << " elements:";
  for (int i = 0; i < p.size(); ++i) out << ' ' << p.label(i);
  out << '\n';
  const auto covers = p.cover_relations();
  out << covers.size() << " covers\n";
  for (const auto& [a, b] : covers) out << "  " << p.label(a) << " < " << p.label(b) << '\n';
  return out.str();
}

std::string cat_text(const FinCat& c) {
  std::ostringstream out;
  out << c.n_objects() << " objects:";
  for (int o = 0; o < c.n_objects(); ++o) out << ' ' << c.object_label(o);
  out << '\n' << c.n_morphisms() << " morphisms\n";
  for (int m = 0; m < c.n_morphisms(); ++m) {
    out << "  " << c.mor_label(m) << ": " << c.object_label(c.src(m)) << " -> "
        << c.object_label(c.tgt(m));
    if (c.is_identity(m)) out << " (identity)";
    out << '\n';
  }
  return out.str();
}

std::string twocat_text(const TwoCat& t) {
  std::ostringstream out;
  out << t.n_objects() << " objects:";
  for (int x = 0; x < t.n_objects(); ++x) out << ' ' << t.object_label(x);
  out << '\n';
  for (int x = 0; x < t.n_objects(); ++x)
    for (int y = 0; y < t.n_objects(); ++y) {
      const FinCat& h = t.hom(x, y);
      if (h.n_objects() == 0) continue;
      out << "hom(" << t.object_label(x) << ", " << t.object_label(y) << "): "
          << h.n_objects() << " objects, " << h.n_morphisms() << " morphisms\n";
      out << "  objects:";
      for (int o = 0; o < h.n_objects(); ++o) out << ' ' << h.object_label(o);
      out << '\n';
    }
  return out.str();
}

std::string two_functor_text(const TwoFunctor& f) {
  std::ostringstream out;
  out << "objects:\n";
  for (int x = 0; x < f.src->n_objects(); ++x)
    out << "  " << f.src->object_label(x) << " -> " << f.tgt->object_label(f.omap[x]) << '\n';
  for (int x = 0; x < f.src->n_objects(); ++x)
    for (int y = 0; y < f.src->n_objects(); ++y) {
      const FinFunctor& h = f.hmap(x, y);
      if (h.src->n_objects() == 0) continue;
      out << "hom(" << f.src->object_label(x) << ", " << f.src->object_label(y) << "):\n";
      for (int o = 0; o < h.src->n_objects(); ++o)
        out << "  " << h.src->object_label(o) << " -> " << h.tgt->object_label(h.omap[o])
            << '\n';
    }
  return out.str();
}

std::string adjunction_text(const AdjunctionData& a) {
  const TwoCat& t = *a.ambient;
  std::ostringstream out;
  out << "left " << t.hom(a.obj_a, a.obj_b).object_label(a.l) << ": "
      << t.object_label(a.obj_a) << " -> " << t.object_label(a.obj_b) << ", right "
      << t.hom(a.obj_b, a.obj_a).object_label(a.r) << ": " << t.object_label(a.obj_b)
      << " -> " << t.object_label(a.obj_a) << ", unit "
      << t.hom(a.obj_a, a.obj_a).mor_label(a.unit) << ", counit "
      << t.hom(a.obj_b, a.obj_b).mor_label(a.counit) << '\n';
  return out.str();
}

std::string square_text(const Square2& s) {
  const TwoCat& t = *s.ambient;
  const bool colax = s.direction == Square2::Dir::colax;
  std::ostringstream out;
  out << (colax ? "colax" : "lax") << " square\n";
  out << "  corners: " << t.object_label(s.tl) << ' ' << t.object_label(s.tr) << " / "
      << t.object_label(s.bl) << ' ' << t.object_label(s.br) << '\n';
  out << "  top "<< t.hom(s.tl, s.tr).object_label(s.top) << ", bottom "
      << t.hom(s.bl, s.br).object_label(s.bottom) << '\n';
  if (colax) {
    out << "  left " << t.hom(s.tl, s.bl).object_label(s.left) << ", right "
        << t.hom(s.tr, s.br).object_label(s.right) << '\n';
    out << "  filler " << t.hom(s.tl, s.br).mor_label(s.filler) << '\n';
  } else {
    out << "  left " << t.hom(s.bl, s.tl).object_label(s.left) << ", right "
        << t.hom(s.br, s.tr).object_label(s.right) << '\n';
    out << "  filler " << t.hom(s.bl, s.tr).mor_label(s.filler) << '\n';
  }
  return out.str();
}

FinCat cat_from_json(const json& j) {
  expect(j.is_object(), "category must be a JSON object");
  for (const char* key : {"objects", "morphisms", "identities", "composition"})
    expect(j.contains(key), std::string("category is missing \"") + key + "\"");
  std::vector<std::string> objects;
  for (const json& o : j.at("objects")) {
    expect(o.is_string(), "object entries must be strings");
    objects.push_back(o.get<std::string>());
  }
  const int n_obj = static_cast<int>(objects.size());
  std::vector<FinCat::Mor> mors;
  for (const json& m : j.at("morphisms")) {
    FinCat::Mor mor{int_field(m, "src"), int_field(m, "tgt"), std::string()};
    expect(m.contains("label") && m.at("label").is_string(), "morphisms need a string label");
    mor.label = m.at("label").get<std::string>();
    expect(mor.src >= 0 && mor.src < n_obj && mor.tgt >= 0 && mor.tgt < n_obj,
           "morphism endpoint out of range");
    mors.push_back(std::move(mor));
  }
  const int n_mor = static_cast<int>(mors.size());
  std::vector<int> identities;
  for (const json& i : j.at("identities")) {
    expect(i.is_number_integer(), "identities must be morphism indices");
    const int v = i.get<int>();
    expect(v >= 0 && v < n_mor, "identity index out of range");
    identities.push_back(v);
  }
  std::vector<std::array<int, 3>> comp;
  for (const json& t : j.at("composition")) {
    expect(t.is_array() && t.size() == 3, "composition entries are [f, g, h] triples");
    std::array<int, 3> triple{};
    for (int k = 0; k < 3; ++k) {
      expect(t[k].is_number_integer(), "composition triples hold morphism indices");
      triple[k] = t[k].get<int>();
      expect(triple[k] >= 0 && triple[k] < n_mor, "composition index out of range");
    }
    comp.push_back(triple);
  }
  return FinCat(std::move(objects), std::move(mors), std::move(identities), comp);
}

TwoCatPtr twocat_from_json(const json& j) {
  expect(j.is_object(), "two-category must be a JSON object");
  for (const char* key : {"objects", "identities", "homs"})
    expect(j.contains(key), std::string("two-category is missing \"") + key + "\"");
  std::vector<std::string> objects;
  for (const json& o : j.at("objects")) {
    expect(o.is_string(), "object entries must be strings");
    objects.push_back(o.get<std::string>());
  }
  const int n = static_cast<int>(objects.size());
  std::vector<CatPtr> homs(static_cast<size_t>(n) * n);
  std::vector<bool> seen(homs.size(), false);
  for (const json& h : j.at("homs")) {
    const int x = int_field(h, "src");
    const int y = int_field(h, "tgt");
    expect(x >= 0 && x < n && y >= 0 && y < n, "hom endpoint out of range");
    const size_t idx = static_cast<size_t>(x) * n + y;
    expect(!seen[idx], "duplicate hom entry");
    expect(h.contains("cat"), "hom entries need a \"cat\"");
    homs[idx] = make_cat(cat_from_json(h.at("cat")));
    seen[idx] = true;
  }
  for (bool s : seen) expect(s, "every ordered object pair needs a hom entry");
  std::vector<int> identities;
  for (const json& i : j.at("identities")) {
    expect(i.is_number_integer(), "identities must be 1-cell indices");
    identities.push_back(i.get<int>());
  }
  std::vector<TwoCat::HCompTable> tables(static_cast<size_t>(n) * n * n);
  if (j.contains("hcomp"))
    for (const json& e : j.at("hcomp")) {
      const int x = int_field(e, "x");
      const int y = int_field(e, "y");
      const int z = int_field(e, "z");
      expect(x >= 0 && x < n && y >= 0 && y < n && z >= 0 && z < n,
             "hcomp triple out of range");
      TwoCat::HCompTable& tab = tables[(static_cast<size_t>(x) * n + y) * n + z];
      expect(e.contains("obj") && e.contains("mor"), "hcomp entries need obj and mor tables");
      tab.obj = e.at("obj").get<std::vector<int>>();
      tab.mor = e.at("mor").get<std::vector<int>>();
    }
  return make_twocat(
      TwoCat(std::move(objects), std::move(homs), std::move(identities), std::move(tables)));
}

AdjunctionData adjunction_from_json(const json& j, TwoCatPtr ambient) {
  return AdjunctionData::make(std::move(ambient), int_field(j, "obj_a"), int_field(j, "obj_b"),
                              int_field(j, "l"), int_field(j, "r"), int_field(j, "unit"),
                              int_field(j, "counit"));
}

Square2 square_from_json(const json& j, TwoCatPtr ambient) {
  expect(j.is_object() && j.contains("direction") && j.at("direction").is_string(),
         "square needs a \"direction\" of \"colax\" or \"lax\"");
  const std::string dir = j.at("direction").get<std::string>();
  expect(dir == "colax" || dir == "lax", "square direction must be \"colax\" or \"lax\"");
  return Square2::make(std::move(ambient),
                       dir == "colax" ? Square2::Dir::colax : Square2::Dir::lax,
                       int_field(j, "tl"), int_field(j, "tr"), int_field(j, "bl"),
                       int_field(j, "br"), int_field(j, "top"), int_field(j, "bottom"),
                       int_field(j, "left"), int_field(j, "right"), int_field(j, "filler"));
}

namespace {

json parse_document(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("bad JSON: ") + e.what());
  }
}

}  // namespace

TwoCatPtr parse_find_input(const std::string& text) {
  const json j = parse_document(text);
  expect(j.is_object() && j.contains("twocat"), "expected a top level \"twocat\" entry");
  return twocat_from_json(j.at("twocat"));
}

MateInput parse_mate_input(const std::string& text) {
  const json j = parse_document(text);
  expect(j.is_object(), "expected a JSON object");
  for (const char* key : {"twocat", "square", "left_adjunction", "right_adjunction"})
    expect(j.contains(key), std::string("input is missing \"") + key + "\"");
  TwoCatPtr ambient = twocat_from_json(j.at("twocat"));
  MateInput in;
  in.square = square_from_json(j.at("square"), ambient);
  in.left_adj = adjunction_from_json(j.at("left_adjunction"), ambient);
  in.right_adj = adjunction_from_json(j.at("right_adjunction"), ambient);
  in.ambient = std::move(ambient);
  return in;
}

}  // namespace gray2
