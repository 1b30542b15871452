// Copyright 2026 The vavqe developers

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "vavqe/pool.hpp"

#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "vavqe/rng.hpp"

namespace vavqe {

ParameterVector ParameterPool::lookup(const AnsatzPath &path) const {
    ParameterVector out;
    out.reserve(space_->path_param_count(path));
    for (int l = 0; l < path.max_layers(); ++l) {
        const auto key = std::make_pair(path.layers[l], l + 1);
        const int len = space_->state_param_count(path.layers[l]);
        auto it = entries_.find(key);
        if (it == entries_.end()) {
            out.insert(out.end(), len, 0.0);
        } else {
            out.insert(out.end(), it->second.begin(), it->second.end());
        }
    }
    return out;
}

void ParameterPool::update(const AnsatzPath &path,
                           const ParameterVector &params) {
    if (static_cast<int>(params.size()) != space_->path_param_count(path))
        throw std::invalid_argument("pool update: parameter count mismatch");
    std::size_t offset = 0;
    for (int l = 0; l < path.max_layers(); ++l) {
        const int len = space_->state_param_count(path.layers[l]);
        if (len > 0)
            set_entry(path.layers[l], l + 1,
                      ParameterVector(params.begin() + offset,
                                      params.begin() + offset + len));
        offset += len;
    }
}

void ParameterPool::set_entry(StateId id, int layer, ParameterVector values) {
    if (static_cast<int>(values.size()) != space_->state_param_count(id))
        throw std::invalid_argument("pool entry: length mismatch for state " +
                                    std::to_string(id));
    if (values.empty())
        return;  // parameter-free states carry no information
    entries_[std::make_pair(id, layer)] = std::move(values);
}

void CandidateTree::insert_trained(const AnsatzPath &path) {
    // First pass: does the leaf already exist?
    const Node *probe = &root_;
    bool is_new = false;
    for (StateId id : path.layers) {
        auto it = probe->children.find(id);
        if (it == probe->children.end()) {
            is_new = true;
            break;
        }
        probe = it->second.get();
    }
    Node *node = &root_;
    node->c_t += 1;
    if (is_new)
        node->c_l += 1;
    for (StateId id : path.layers) {
        auto &child = node->children[id];
        if (!child)
            child = std::make_unique<Node>();
        node = child.get();
        node->c_t += 1;
        if (is_new)
            node->c_l += 1;
    }
}

AnsatzPath CandidateTree::sample(const AnsatzSpace &space, double epsilon2,
                                 std::mt19937_64 &rng) const {
    if (root_.c_l == 0)
        throw std::logic_error("tree sample: no leaves");
    const long long eta = unit_real(rng) < epsilon2 ? 1 : 0;
    AnsatzPath path(space.n_qubits(), space.max_layers());
    const Node *node = &root_;
    for (int l = 0; l < space.max_layers(); ++l) {
        long long total = 0;
        for (const auto &[id, child] : node->children)
            total += child->c_l + eta * child->c_t;
        std::uint64_t x = bounded_u64(rng, static_cast<std::uint64_t>(total));
        for (const auto &[id, child] : node->children) {
            const long long w = child->c_l + eta * child->c_t;
            if (x < static_cast<std::uint64_t>(w)) {
                path.layers[l] = id;
                node = child.get();
                break;
            }
            x -= w;
        }
    }
    return path;
}

AnsatzPath sample_path(const CandidateTree &tree, const AnsatzSpace &space,
                       const GreedyConfig &cfg, std::mt19937_64 &rng) {
    if (tree.leaf_count() > 0 && unit_real(rng) < cfg.epsilon1)
        return tree.sample(space, cfg.epsilon2, rng);
    return space.sample_uniform(rng);
}

namespace {

void save_node(const CandidateTree::Node &node, std::vector<StateId> &prefix,
               std::ostream &out) {
    out << "tree " << prefix.size();
    for (StateId id : prefix)
        out << ' ' << id;
    out << ' ' << node.c_l << ' ' << node.c_t << '\n';
    for (const auto &[id, child] : node.children) {
        prefix.push_back(id);
        save_node(*child, prefix, out);
        prefix.pop_back();
    }
}

} // namespace

void save_checkpoint(const ParameterPool &pool, const CandidateTree &tree,
                     std::ostream &out) {
    char buf[32];
    for (const auto &[key, values] : pool.entries()) {
        out << "pool " << key.first << ' ' << key.second << ' '
            << values.size();
        for (double v : values) {
            std::snprintf(buf, sizeof buf, "%.17g", v);
            out << ' ' << buf;
        }
        out << '\n';
    }
    std::vector<StateId> prefix;
    save_node(tree.root(), prefix, out);
}

std::pair<ParameterPool, CandidateTree>
load_checkpoint(std::istream &in, const AnsatzSpace &space) {
    ParameterPool pool(space);
    CandidateTree tree;
    // Leaf c_t values reconstruct the tree exactly: inserting each leaf
    // path c_t times reproduces every internal count.
    std::vector<std::pair<AnsatzPath, long long>> leaves;
    std::map<std::pair<StateId, int>, ParameterVector> entries;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty())
            continue;
        std::istringstream ls(line);
        std::string tag;
        ls >> tag;
        if (tag == "pool") {
            StateId id;
            int layer;
            std::size_t count;
            if (!(ls >> id >> layer >> count))
                throw std::runtime_error("checkpoint line " +
                                         std::to_string(lineno) +
                                         ": bad pool entry");
            ParameterVector values(count);
            for (double &v : values)
                if (!(ls >> v))
                    throw std::runtime_error("checkpoint line " +
                                             std::to_string(lineno) +
                                             ": short pool entry");
            entries[{id, layer}] = values;
        } else if (tag == "tree") {
            int depth;
            if (!(ls >> depth))
                throw std::runtime_error("checkpoint line " +
                                         std::to_string(lineno) +
                                         ": bad tree node");
            std::vector<StateId> prefix(depth);
            for (StateId &id : prefix)
                if (!(ls >> id))
                    throw std::runtime_error("checkpoint line " +
                                             std::to_string(lineno) +
                                             ": short tree prefix");
            long long c_l, c_t;
            if (!(ls >> c_l >> c_t))
                throw std::runtime_error("checkpoint line " +
                                         std::to_string(lineno) +
                                         ": bad tree counts");
            if (depth == space.max_layers()) {
                AnsatzPath p(space.n_qubits(), space.max_layers());
                p.layers = prefix;
                leaves.emplace_back(std::move(p), c_t);
            }
        } else {
            throw std::runtime_error("checkpoint line " +
                                     std::to_string(lineno) +
                                     ": unknown tag '" + tag + "'");
        }
    }
    for (const auto &[path, c_t] : leaves)
        for (long long i = 0; i < c_t; ++i)
            tree.insert_trained(path);
    for (auto &[key, values] : entries) {
        if (key.second < 1 || key.second > space.max_layers())
            throw std::runtime_error("checkpoint: bad pool layer index");
        pool.set_entry(key.first, key.second, std::move(values));
    }
    return {std::move(pool), std::move(tree)};
}

} // namespace vavqe
