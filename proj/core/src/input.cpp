#include "input.hpp"

#include "coembed/errors.hpp"
#include "coembed/expression.hpp"

#include <set>

namespace coembed::io {

namespace {

std::string expression_text(const Json& node)
{
    if (node.is_string()) {
        return node.get<std::string>();
    }
    if (node.is_number_integer()) {
        return std::to_string(node.get<long long>());
    }
    throw InvalidInput("expected an expression string, got " + node.dump());
}

const Json& member(const Json& node, const char* key)
{
    if (!node.is_object() || !node.contains(key)) {
        throw InvalidInput(std::string("missing field '") + key + "'");
    }
    return node.at(key);
}

std::string string_member(const Json& node, const char* key)
{
    const Json& v = member(node, key);
    if (!v.is_string()) {
        throw InvalidInput(std::string("field '") + key + "' must be a string");
    }
    return v.get<std::string>();
}

const Json& list_member(const Json& node, const char* key)
{
    const Json& v = member(node, key);
    if (!v.is_array()) {
        throw InvalidInput(std::string("field '") + key + "' must be a list");
    }
    return v;
}

AlgebraKind parse_kind(const std::string& s)
{
    if (s == "free") {
        return AlgebraKind::free;
    }
    if (s == "commutative") {
        return AlgebraKind::commutative;
    }
    if (s == "pbw") {
        return AlgebraKind::pbw;
    }
    throw InvalidInput("unknown algebra kind '" + s + "'");
}

ScalarField parse_field(const std::string& s)
{
    if (s == "Q") {
        return ScalarField::rational;
    }
    if (s == "Qi") {
        return ScalarField::gaussian;
    }
    throw InvalidInput("unknown scalar field '" + s + "' (expected Q or Qi)");
}

MultiIndex multi_index(const Json& node, std::size_t n)
{
    if (!node.is_array() || node.size() != n) {
        throw InvalidInput("multi-index must be a list of " + std::to_string(n) + " exponents");
    }
    MultiIndex out;
    for (const auto& e : node) {
        if (!e.is_number_unsigned()) {
            throw InvalidInput("multi-index entries must be non-negative integers");
        }
        out.push_back(e.get<unsigned>());
    }
    return out;
}

} // namespace

AlgebraPtr load_algebra(const Json& node, ConfluencePolicy policy)
{
    AlgebraSpec spec;
    spec.name = string_member(node, "name");
    spec.kind = parse_kind(node.contains("kind") ? string_member(node, "kind") : "commutative");
    spec.field = parse_field(node.contains("scalars") ? string_member(node, "scalars") : "Q");
    for (const auto& g : list_member(node, "generators")) {
        if (!g.is_string()) {
            throw InvalidInput("generator names must be strings");
        }
        const auto name = g.get<std::string>();
        if (name == "i" || name == "h") {
            throw InvalidInput("'" + name + "' is reserved and cannot name a generator");
        }
        spec.generators.push_back(name);
    }
    if (node.contains("relations")) {
        const auto cover = Algebra::free(spec.name, spec.generators, spec.field);
        for (const auto& r : list_member(node, "relations")) {
            spec.relations.push_back(parse_polynomial(expression_text(r), cover).terms());
        }
    }
    return Algebra::create(std::move(spec), policy);
}

Document::Document(Json root, ConfluencePolicy policy) : root_(std::move(root))
{
    if (!root_.is_object()) {
        throw InvalidInput("input must be a JSON object");
    }
    if (root_.contains("algebra")) {
        algebras_.push_back(load_algebra(root_.at("algebra"), policy));
    }
    if (root_.contains("algebras")) {
        for (const auto& a : list_member(root_, "algebras")) {
            algebras_.push_back(load_algebra(a, policy));
        }
    }
    if (algebras_.empty()) {
        throw InvalidInput("input declares no algebra");
    }
    std::set<std::string> names;
    for (const auto& a : algebras_) {
        if (!names.insert(a->name()).second) {
            throw InvalidInput("algebra '" + a->name() + "' declared twice");
        }
    }
}

Document Document::parse(std::string_view text, ConfluencePolicy policy)
{
    Json root;
    try {
        root = Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw InvalidInput(std::string("malformed JSON: ") + e.what());
    }
    return Document(std::move(root), policy);
}

const AlgebraPtr& Document::algebra(const std::string& name) const
{
    for (const auto& a : algebras_) {
        if (a->name() == name) {
            return a;
        }
    }
    throw InvalidInput("unknown algebra '" + name + "'");
}

const AlgebraPtr& Document::algebra_for(const char* key) const
{
    if (root_.contains(key) && root_.at(key).is_object() && root_.at(key).contains("algebra") &&
        root_.at(key).at("algebra").is_string()) {
        return algebra(root_.at(key).at("algebra").get<std::string>());
    }
    return algebras_.front();
}

std::optional<std::size_t> Document::size_option(const char* key) const
{
    if (!root_.contains(key)) {
        return std::nullopt;
    }
    const Json& v = root_.at(key);
    if (!v.is_number_unsigned()) {
        throw InvalidInput(std::string("field '") + key + "' must be a non-negative integer");
    }
    return v.get<std::size_t>();
}

Polynomial Document::polynomial(const Json& expr, const AlgebraPtr& algebra) const
{
    return parse_polynomial(expression_text(expr), algebra);
}

std::vector<Polynomial> Document::polynomials(const Json& list, const AlgebraPtr& algebra) const
{
    if (!list.is_array()) {
        throw InvalidInput("expected a list of expressions");
    }
    std::vector<Polynomial> out;
    for (const auto& e : list) {
        out.push_back(polynomial(e, algebra));
    }
    return out;
}

std::vector<Polynomial> Document::images(const Json& map, const AlgebraPtr& domain, const AlgebraPtr& codomain) const
{
    if (!map.is_object()) {
        throw InvalidInput("images must be an object {generator: expression}");
    }
    std::vector<Polynomial> out(domain->generator_count(), Polynomial(codomain));
    for (const auto& [gen, expr] : map.items()) {
        const auto index = domain->index_of(gen);
        if (!index) {
            throw InvalidInput("'" + gen + "' is not a generator of '" + domain->name() + "'");
        }
        out[*index] = polynomial(expr, codomain);
    }
    return out;
}

AlgebraHom Document::hom() const
{
    const Json& node = member(root_, "hom");
    const auto& domain = algebra(string_member(node, "domain"));
    const auto& codomain = algebra(string_member(node, "codomain"));
    std::optional<std::vector<Polynomial>> witnesses;
    if (node.contains("witnesses")) {
        witnesses = images(node.at("witnesses"), codomain, domain);
    }
    return AlgebraHom(domain, codomain, images(member(node, "images"), domain, codomain), std::move(witnesses));
}

std::optional<Ideal> Document::kernel() const
{
    const Json& node = member(root_, "hom");
    if (!node.contains("kernel")) {
        return std::nullopt;
    }
    const auto& domain = algebra(string_member(node, "domain"));
    return Ideal(domain, polynomials(node.at("kernel"), domain));
}

Ideal Document::ideal(const char* key, const AlgebraPtr& fallback) const
{
    const Json& node = member(root_, key);
    if (node.is_array()) {
        return Ideal(fallback, polynomials(node, fallback));
    }
    const AlgebraPtr& ambient = node.contains("algebra") ? algebra(string_member(node, "algebra")) : fallback;
    return Ideal(ambient, polynomials(list_member(node, "generators"), ambient));
}

std::vector<NamedDerivation> Document::derivations(const char* key, const AlgebraPtr& alg) const
{
    std::vector<NamedDerivation> out;
    if (!root_.contains(key)) {
        return out;
    }
    for (const auto& node : list_member(root_, key)) {
        const std::string name = string_member(node, "name");
        if (node.contains("inner")) {
            out.push_back({name, Derivation::inner(polynomial(node.at("inner"), alg))});
        } else {
            out.push_back({name, Derivation(alg, images(member(node, "images"), alg, alg))});
        }
    }
    return out;
}

PoissonStructure Document::poisson() const
{
    const Json& node = member(root_, "poisson");
    const AlgebraPtr& ring = algebra_for("poisson");
    std::map<std::pair<std::size_t, std::size_t>, Polynomial> components;
    for (const auto& c : list_member(node, "components")) {
        const auto left = ring->index_of(string_member(c, "left"));
        const auto right = ring->index_of(string_member(c, "right"));
        if (!left || !right || *left == *right) {
            throw InvalidInput("Poisson component needs two distinct generators of '" + ring->name() + "'");
        }
        Polynomial value = polynomial(member(c, "value"), ring);
        auto key = std::make_pair(*left, *right);
        if (key.first > key.second) {
            std::swap(key.first, key.second);
            value = -value;
        }
        if (!components.emplace(key, value).second) {
            throw InvalidInput("Poisson component given twice");
        }
    }
    return PoissonStructure(ring, std::move(components));
}

StarProduct Document::star(std::optional<std::size_t> order) const
{
    const Json& node = member(root_, "star");
    const AlgebraPtr& ring = algebra_for("star");
    std::size_t r = 0;
    if (order) {
        r = *order;
    } else {
        const Json& v = member(node, "order");
        if (!v.is_number_unsigned()) {
            throw InvalidInput("star order must be a non-negative integer");
        }
        r = v.get<std::size_t>();
    }
    if (order && node.contains("operators") && node.contains("order") && node.at("order").is_number_unsigned() &&
        *order > node.at("order").get<std::size_t>()) {
        throw InvalidInput("requested order exceeds the order of the operators given");
    }
    if (node.contains("exp")) {
        const Json& e = node.at("exp");
        const VectorField x(ring, images(member(e, "X"), ring, ring));
        const VectorField y(ring, images(member(e, "Y"), ring, ring));
        return exp_star(x, y, r);
    }
    std::vector<BidiffOperator> ops(r + 1, BidiffOperator(ring));
    ops[0] = BidiffOperator::pointwise(ring);
    for (const auto& op : list_member(node, "operators")) {
        const Json& k = member(op, "k");
        if (!k.is_number_unsigned() || k.get<std::size_t>() == 0) {
            throw InvalidInput("operator index k must be a positive integer");
        }
        const std::size_t index = k.get<std::size_t>();
        if (index > r) {
            continue;
        }
        for (const auto& t : list_member(op, "terms")) {
            ops[index].add_term(polynomial(member(t, "coeff"), ring),
                                multi_index(member(t, "alpha"), ring->generator_count()),
                                multi_index(member(t, "beta"), ring->generator_count()));
        }
    }
    return StarProduct(ring, std::move(ops));
}

} // namespace coembed::io
