#include <fstream>
#include <sstream>
#include <stdexcept>

#include "stuntkit/csv.hpp"
#include "stuntkit/ensemble.hpp"

namespace stuntkit {

namespace {

constexpr const char* kMagic = "stuntkit-model";
constexpr int kVersion = 1;

void write_model(std::ostream& out, const Model& m) {
  out << "kind " << model_kind_name(m.kind) << '\n';
  out << "n_features " << m.n_features << '\n';
  out << "classes";
  for (ClassLabel c : m.classes) out << ' ' << static_cast<int>(c);
  out << '\n';
  out << "tree " << m.tree.nodes.size() << '\n';
  for (const TreeNode& n : m.tree.nodes) {
    if (n.is_leaf) {
      out << "leaf " << static_cast<int>(n.leaf) << '\n';
    } else {
      out << "split " << n.feature << ' ' << format_double(n.threshold) << ' '
          << n.left << ' ' << n.right << '\n';
    }
  }
  out << "weights";
  for (double w : m.weights) out << ' ' << format_double(w);
  out << '\n';
  out << "members " << m.members.size() << '\n';
  for (const Model& member : m.members) write_model(out, member);
}

std::string expect_line(std::istream& in, const std::string& head) {
  std::string line;
  if (!std::getline(in, line))
    throw std::invalid_argument("model parse: unexpected end of input, wanted '" +
                                head + "'");
  if (line.rfind(head, 0) != 0)
    throw std::invalid_argument("model parse: expected '" + head + "', got '" + line +
                                "'");
  return line.size() > head.size() ? line.substr(head.size() + 1) : std::string();
}

Model read_model(std::istream& in) {
  Model m;
  m.kind = model_kind_from_name(expect_line(in, "kind"));
  m.n_features = std::stoul(expect_line(in, "n_features"));
  {
    std::istringstream cs(expect_line(in, "classes"));
    int code;
    while (cs >> code) {
      if (code < 0 || code >= static_cast<int>(kNumClasses))
        throw std::invalid_argument("model parse: bad class id");
      m.classes.push_back(static_cast<ClassLabel>(code));
    }
  }
  const std::size_t n_nodes = std::stoul(expect_line(in, "tree"));
  m.tree.n_features = m.n_features;
  m.tree.nodes.resize(n_nodes);
  for (std::size_t i = 0; i < n_nodes; ++i) {
    std::string line;
    if (!std::getline(in, line))
      throw std::invalid_argument("model parse: truncated tree");
    std::istringstream ls(line);
    std::string tag;
    ls >> tag;
    TreeNode& n = m.tree.nodes[i];
    if (tag == "leaf") {
      int code;
      ls >> code;
      n.is_leaf = true;
      n.leaf = static_cast<ClassLabel>(code);
    } else if (tag == "split") {
      std::string thr;
      ls >> n.feature >> thr >> n.left >> n.right;
      n.is_leaf = false;
      n.threshold = std::strtod(thr.c_str(), nullptr);
    } else {
      throw std::invalid_argument("model parse: bad node line '" + line + "'");
    }
  }
  {
    std::istringstream ws(expect_line(in, "weights"));
    std::string tok;
    while (ws >> tok) m.weights.push_back(std::strtod(tok.c_str(), nullptr));
  }
  const std::size_t n_members = std::stoul(expect_line(in, "members"));
  m.members.reserve(n_members);
  for (std::size_t i = 0; i < n_members; ++i) m.members.push_back(read_model(in));
  return m;
}

}  // namespace

std::string serialize_model(const Model& model) {
  std::ostringstream out;
  out << kMagic << " v" << kVersion << '\n';
  write_model(out, model);
  return out.str();
}

Model parse_model(const std::string& text) {
  std::istringstream in(text);
  std::string header;
  std::getline(in, header);
  if (header != std::string(kMagic) + " v1")
    throw std::invalid_argument("model parse: bad header '" + header + "'");
  return read_model(in);
}

void save_model(const Model& model, const std::string& path) {
  write_file_atomic(path, serialize_model(model));
}

Model load_model(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open model file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_model(buf.str());
}

}  // namespace stuntkit
