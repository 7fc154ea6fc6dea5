#include "e8/unipotent.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace e8 {

Word default_word() {
    Word w;
    for (int i = 0; i < 8; i++) w.push_back({i, 1});
    for (int i = 0; i < 8; i++) w.push_back({120 + i, 1});
    return w;
}

SparseZ ad_unipotent(const Chevalley& ch, int root, const mpz_class& u) {
    if (root < 0 || root >= 240) throw std::invalid_argument("ad_unipotent: bad root index");
    SparseZ s;
    s.n = 248;
    for (int i = 0; i < 248; i++) s.t.emplace_back(i, i, 1);
    if (u != 0) {
        for (const auto& [r, c, v] : ch.ad_root_triplets(root))
            s.t.emplace_back(r, c, u * v);
        // u^2/2 * ad^2 contributes the single entry -u^2 at (e_r, e_{-r})
        s.t.emplace_back(8 + root, 8 + ch.rs->negate(root), -u * u);
    }
    std::sort(s.t.begin(), s.t.end(),
              [](const auto& x, const auto& y) {
                  return std::make_pair(std::get<0>(x), std::get<1>(x)) <
                         std::make_pair(std::get<0>(y), std::get<1>(y));
              });
    return s;
}

ZMat word_product(const Chevalley& ch, const Word& w) {
    ZMat m = ZMat::identity(248);
    for (const auto& let : w) m = mul_sparse(m, ad_unipotent(ch, let.root, let.u));
    return m;
}

Word parse_word(const std::string& text) {
    Word w;
    std::istringstream is(text);
    std::string line;
    int lineno = 0;
    while (std::getline(is, line)) {
        lineno++;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok)) continue;
        Letter let;
        try {
            if (tok[0] == 'r') {
                let.root = std::stoi(tok.substr(1));
                if (let.root < 0 || let.root >= 240) throw std::out_of_range("root index");
            } else {
                int k = std::stoi(tok);
                if (k == 0 || k > 8 || k < -8) throw std::out_of_range("simple index");
                let.root = k > 0 ? k - 1 : 120 + (-k - 1);
            }
            std::string uval;
            if (!(ls >> uval)) throw std::invalid_argument("missing parameter");
            let.u = mpz_class(uval);
        } catch (const std::exception&) {
            throw std::runtime_error("parse_word: bad letter at line " + std::to_string(lineno));
        }
        std::string extra;
        if (ls >> extra) throw std::runtime_error("parse_word: trailing tokens at line " + std::to_string(lineno));
        w.push_back(std::move(let));
    }
    return w;
}

std::string word_to_text(const Word& w) {
    std::ostringstream os;
    for (const auto& let : w) {
        if (let.root < 8) os << (let.root + 1);
        else if (let.root >= 120 && let.root < 128) os << "-" << (let.root - 119);
        else os << "r" << let.root;
        os << " " << let.u.get_str() << "\n";
    }
    return os.str();
}

Word read_word_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("read_word_file: cannot open " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return parse_word(ss.str());
}

}  // namespace e8
