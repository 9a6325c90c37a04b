#include "polystab/json_io.hpp"

#include <fstream>

namespace polystab {

namespace {

const Json& expectField(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key))
        throw ParseError(std::string("missing field \"") + key + "\"");
    return j.at(key);
}

}  // namespace

Json toJson(const Rational& x) { return formatRational(x); }

Rational rationalFromJson(const Json& j) {
    if (!j.is_string()) throw ParseError("rational must be a \"p/q\" string");
    auto r = parseRational(j.get<std::string>());
    if (!r) throw ParseError("malformed rational: " + j.get<std::string>());
    return *r;
}

Json toJson(const GaussianRational& z) {
    return Json{{"re", toJson(z.re)}, {"im", toJson(z.im)}};
}

GaussianRational gaussianFromJson(const Json& j) {
    return {rationalFromJson(expectField(j, "re")), rationalFromJson(expectField(j, "im"))};
}

Json toJson(const CPoly& p) {
    Json arr = Json::array();
    for (const auto& c : p.coeffs()) arr.push_back(toJson(c));
    return arr;
}

CPoly cpolyFromJson(const Json& j) {
    if (!j.is_array()) throw ParseError("polynomial must be an array of coefficients");
    std::vector<GaussianRational> coeffs;
    for (const auto& c : j) coeffs.push_back(gaussianFromJson(c));
    return CPoly(std::move(coeffs));
}

Json toJson(const PhaseGerm& g) {
    return Json{{"poly", toJson(g.poly)}, {"branch", g.branch}};
}

PhaseGerm phaseGermFromJson(const Json& j) {
    const Json& branch = expectField(j, "branch");
    if (!branch.is_number_integer()) throw ParseError("branch must be an integer");
    CPoly p = cpolyFromJson(expectField(j, "poly"));
    if (p.isZero()) throw ParseError("phase germ polynomial must be nonzero");
    return PhaseGerm(std::move(p), branch.get<long>());
}

Json toJson(const NumClass& c) {
    Json obj = Json::object();
    for (int d = 0; d <= c.model()->dimension(); ++d) {
        bool nonzero = false;
        for (const auto& x : c.coords()[d]) nonzero = nonzero || !x.isZero();
        if (!nonzero) continue;
        Json arr = Json::array();
        for (const auto& x : c.coords()[d]) arr.push_back(toJson(x));
        obj[std::to_string(d)] = std::move(arr);
    }
    return obj;
}

NumClass numClassFromJson(const Json& j, const ModelPtr& model) {
    if (!j.is_object()) throw ParseError("class must be an object of degree -> coordinates");
    NumClass c(model);
    for (const auto& [key, value] : j.items()) {
        int d;
        try {
            d = std::stoi(key);
        } catch (const std::exception&) {
            throw ParseError("class degree key must be an integer string: " + key);
        }
        if (d < 0 || d > model->dimension()) throw ParseError("class degree out of range: " + key);
        if (!value.is_array() || static_cast<int>(value.size()) != model->basisSize(d))
            throw ParseError("coordinate count mismatch in degree " + key);
        for (int i = 0; i < model->basisSize(d); ++i) c.setCoord(d, i, gaussianFromJson(value[i]));
    }
    return c;
}

Json toJson(const GradedRingModel& m) {
    Json j;
    j["dimension"] = m.dimension();
    j["bases"] = m.bases();
    Json products = Json::array();
    for (int d = 0; d <= m.dimension(); ++d)
        for (int e = d; d + e <= m.dimension(); ++e)
            for (int i = 0; i < m.basisSize(d); ++i)
                for (int jj = 0; jj < m.basisSize(e); ++jj) {
                    const auto& coeffs = m.productCoeffs(d, i, e, jj);
                    Json result = Json::object();
                    for (int t = 0; t < m.basisSize(d + e); ++t)
                        if (coeffs[t] != 0) result[m.bases()[d + e][t]] = toJson(coeffs[t]);
                    products.push_back(Json{{"left", m.bases()[d][i]},
                                            {"right", m.bases()[e][jj]},
                                            {"result", std::move(result)}});
                }
    j["products"] = std::move(products);
    Json integrate = Json::object();
    for (int i = 0; i < m.basisSize(m.dimension()); ++i)
        if (m.integrationCoeff(i) != 0)
            integrate[m.bases()[m.dimension()][i]] = toJson(m.integrationCoeff(i));
    j["integrate"] = std::move(integrate);
    Json effective = Json::array();
    for (const auto& perDim : m.effectiveGenerators()) {
        Json list = Json::array();
        for (const auto& gen : perDim) {
            Json coords = Json::array();
            for (const auto& x : gen) coords.push_back(toJson(x));
            list.push_back(std::move(coords));
        }
        effective.push_back(std::move(list));
    }
    j["effective"] = std::move(effective);
    if (m.hasTodd()) {
        Json td = Json::object();
        for (int d = 0; d <= m.dimension(); ++d) {
            Json coords = Json::array();
            bool nonzero = false;
            for (const auto& x : (*m.tdData())[d]) {
                coords.push_back(toJson(x));
                nonzero = nonzero || x != 0;
            }
            if (nonzero) td[std::to_string(d)] = std::move(coords);
        }
        j["td"] = std::move(td);
    }
    return j;
}

ModelPtr modelFromJson(const Json& j) {
    int dim = expectField(j, "dimension").get<int>();
    std::vector<std::vector<std::string>> bases =
        expectField(j, "bases").get<std::vector<std::vector<std::string>>>();
    std::vector<GradedRingModel::BasisProduct> products;
    for (const auto& p : expectField(j, "products")) {
        GradedRingModel::BasisProduct bp;
        bp.left = expectField(p, "left").get<std::string>();
        bp.right = expectField(p, "right").get<std::string>();
        for (const auto& [label, coeff] : expectField(p, "result").items())
            bp.result.emplace_back(label, rationalFromJson(coeff));
        products.push_back(std::move(bp));
    }
    std::vector<std::pair<std::string, Rational>> integrate;
    for (const auto& [label, coeff] : expectField(j, "integrate").items())
        integrate.emplace_back(label, rationalFromJson(coeff));
    std::vector<std::vector<std::vector<Rational>>> effective;
    if (j.contains("effective")) {
        for (const auto& perDim : j.at("effective")) {
            std::vector<std::vector<Rational>> list;
            for (const auto& gen : perDim) {
                std::vector<Rational> coords;
                for (const auto& x : gen) coords.push_back(rationalFromJson(x));
                list.push_back(std::move(coords));
            }
            effective.push_back(std::move(list));
        }
    }
    std::optional<std::vector<std::vector<Rational>>> td;
    if (j.contains("td") && !j.at("td").empty()) {
        const Json& tj = j.at("td");
        std::vector<std::vector<Rational>> coords(dim + 1);
        for (int d = 0; d <= dim; ++d) coords[d].assign(bases[d].size(), Rational(0));
        for (const auto& [key, value] : tj.items()) {
            int d = std::stoi(key);
            if (d < 0 || d > dim) throw ParseError("td degree out of range");
            if (!value.is_array() || value.size() != bases[d].size())
                throw ParseError("td coordinate count mismatch in degree " + key);
            for (std::size_t i = 0; i < value.size(); ++i)
                coords[d][i] = rationalFromJson(value[i]);
        }
        td = std::move(coords);
    }
    try {
        return std::make_shared<GradedRingModel>(dim, std::move(bases), products,
                                                 std::move(integrate), std::move(effective),
                                                 std::move(td));
    } catch (const DomainError& e) {
        throw ParseError(std::string("model rejected: ") + e.what());
    }
}

ModelPtr loadModel(const std::string& nameOrPath) {
    if (nameOrPath.size() == 2 && nameOrPath[0] == 'P' && nameOrPath[1] >= '1' &&
        nameOrPath[1] <= '9')
        return GradedRingModel::projectiveSpace(nameOrPath[1] - '0');
    if (nameOrPath.rfind("degree-only:", 0) == 0) {
        std::string rest = nameOrPath.substr(12);
        auto colon = rest.find(':');
        int n = std::stoi(rest.substr(0, colon));
        Rational top(1);
        if (colon != std::string::npos) {
            auto r = parseRational(rest.substr(colon + 1));
            if (!r) throw ParseError("bad top-degree in model name: " + nameOrPath);
            top = *r;
        }
        return GradedRingModel::degreeOnly(n, top);
    }
    return modelFromJson(loadJsonFile(nameOrPath));
}

Json toJson(const OmegaData& o) {
    Json j;
    j["omega"] = toJson(o.omega);
    Json rho = Json::array();
    for (const auto& r : o.rho.rho) rho.push_back(toJson(r));
    j["rho"] = std::move(rho);
    j["p"] = o.p.p;
    j["U"] = toJson(o.U);
    return j;
}

OmegaValidation omegaFromJson(const Json& j, ModelPtr model) {
    if (!model) {
        const Json& m = expectField(j, "model");
        model = loadModel(m.get<std::string>());
    }
    NumClass omega = numClassFromJson(expectField(j, "omega"), model);
    StabilityVector rho;
    for (const auto& r : expectField(j, "rho")) rho.rho.push_back(gaussianFromJson(r));
    PerversityFunction p;
    p.p = expectField(j, "p").get<std::vector<long>>();
    NumClass u = numClassFromJson(expectField(j, "U"), model);
    return validateOmega(model, omega, rho, p, u);
}

Json toJson(const DualizingData& d) {
    return Json{{"D", d.D}, {"chOmegaX", toJson(d.chOmegaX)}};
}

DualizingData dualizingFromJson(const Json& j, const ModelPtr& model) {
    DualizingData d;
    d.D = expectField(j, "D").get<long>();
    d.chOmegaX = numClassFromJson(expectField(j, "chOmegaX"), model);
    return d;
}

Json toJson(const QuiverModel& m) {
    Json j;
    j["vertices"] = m.vertices;
    Json arrows = Json::array();
    for (const auto& a : m.arrows)
        arrows.push_back(Json{{"from", m.vertices[a.from]}, {"to", m.vertices[a.to]}});
    j["arrows"] = std::move(arrows);
    j["field"] = m.fieldSize;
    Json charges = Json::object();
    for (std::size_t v = 0; v < m.vertices.size(); ++v) charges[m.vertices[v]] = toJson(m.charges[v]);
    j["charges"] = std::move(charges);
    j["cap"] = m.dimCap;
    return j;
}

QuiverModel quiverFromJson(const Json& j) {
    QuiverModel m;
    m.vertices = expectField(j, "vertices").get<std::vector<std::string>>();
    auto indexOf = [&](const std::string& name) {
        for (std::size_t i = 0; i < m.vertices.size(); ++i)
            if (m.vertices[i] == name) return static_cast<int>(i);
        throw ParseError("unknown vertex: " + name);
    };
    if (j.contains("arrows"))
        for (const auto& a : j.at("arrows")) {
            QuiverModel::Arrow arrow{indexOf(expectField(a, "from").get<std::string>()),
                                     indexOf(expectField(a, "to").get<std::string>())};
            for (const auto& prev : m.arrows)
                if (prev.from == arrow.from && prev.to == arrow.to)
                    throw ParseError("parallel arrows share a matrix key: " +
                                     m.vertices[arrow.from] + "->" + m.vertices[arrow.to]);
            m.arrows.push_back(arrow);
        }
    if (j.contains("field")) m.fieldSize = j.at("field").get<int>();
    if (j.contains("cap")) m.dimCap = j.at("cap").get<int>();
    m.charges.resize(m.vertices.size());
    for (const auto& [name, poly] : expectField(j, "charges").items())
        m.charges[indexOf(name)] = cpolyFromJson(poly);
    try {
        m.validate();
    } catch (const DomainError& e) {
        throw ParseError(std::string("quiver rejected: ") + e.what());
    }
    return m;
}

Json repToJson(const QuiverModel& m, const QuiverRep& r) {
    Json j;
    Json dims = Json::object();
    for (std::size_t v = 0; v < m.vertices.size(); ++v) dims[m.vertices[v]] = r.dims[v];
    j["dims"] = std::move(dims);
    Json mats = Json::object();
    for (std::size_t a = 0; a < m.arrows.size(); ++a)
        mats[m.vertices[m.arrows[a].from] + "->" + m.vertices[m.arrows[a].to]] = r.mats[a];
    j["matrices"] = std::move(mats);
    return j;
}

QuiverRep repFromJson(const Json& j, const QuiverModel& m) {
    std::vector<int> dims(m.vertices.size(), 0);
    for (const auto& [name, d] : expectField(j, "dims").items()) {
        bool found = false;
        for (std::size_t v = 0; v < m.vertices.size(); ++v)
            if (m.vertices[v] == name) {
                dims[v] = d.get<int>();
                found = true;
            }
        if (!found) throw ParseError("unknown vertex in dims: " + name);
    }
    std::vector<FMat> mats(m.arrows.size());
    for (std::size_t a = 0; a < m.arrows.size(); ++a) {
        std::string key = m.vertices[m.arrows[a].from] + "->" + m.vertices[m.arrows[a].to];
        if (j.contains("matrices") && j.at("matrices").contains(key))
            mats[a] = j.at("matrices").at(key).get<FMat>();
        else
            mats[a].assign(dims[m.arrows[a].to], std::vector<int>(dims[m.arrows[a].from], 0));
    }
    try {
        return makeRep(m, std::move(dims), std::move(mats));
    } catch (const DomainError& e) {
        throw ParseError(std::string("rep rejected: ") + e.what());
    }
}

Json toJson(const FiniteStabilityPresentation& p) {
    Json objects = Json::array();
    for (const auto& obj : p.objects)
        objects.push_back(Json{{"label", obj.label},
                               {"Z", toJson(obj.Z)},
                               {"phiPlus", toJson(obj.phiPlus)},
                               {"phiMinus", toJson(obj.phiMinus)},
                               {"semistable", obj.semistable}});
    return Json{{"objects", std::move(objects)}};
}

FiniteStabilityPresentation presentationFromJson(const Json& j) {
    FiniteStabilityPresentation p;
    for (const auto& o : expectField(j, "objects")) {
        TestObject obj;
        obj.label = expectField(o, "label").get<std::string>();
        obj.Z = cpolyFromJson(expectField(o, "Z"));
        obj.phiPlus = phaseGermFromJson(expectField(o, "phiPlus"));
        obj.phiMinus = phaseGermFromJson(expectField(o, "phiMinus"));
        obj.semistable = expectField(o, "semistable").get<bool>();
        p.objects.push_back(std::move(obj));
    }
    try {
        p.validate();
    } catch (const DomainError& e) {
        throw ParseError(std::string("presentation rejected: ") + e.what());
    }
    return p;
}

Json toJson(const CentralChargeMap& m) {
    Json charges = Json::object();
    for (const auto& [label, poly] : m.charges) charges[label] = toJson(poly);
    return Json{{"charges", std::move(charges)}};
}

CentralChargeMap chargeMapFromJson(const Json& j) {
    CentralChargeMap m;
    for (const auto& [label, poly] : expectField(j, "charges").items())
        m.charges[label] = cpolyFromJson(poly);
    return m;
}

Json toJson(const SurfaceClass& c) {
    return Json{{"rk", toJson(c.rk)},    {"c1w", toJson(c.c1w)}, {"c1b", toJson(c.c1b)},
                {"c1sq", toJson(c.c1sq)}, {"ch2", toJson(c.ch2)}, {"w2", toJson(c.w2)},
                {"bw", toJson(c.bw)},    {"b2", toJson(c.b2)}};
}

SurfaceClass surfaceClassFromJson(const Json& j) {
    SurfaceClass c;
    c.rk = rationalFromJson(expectField(j, "rk"));
    c.c1w = rationalFromJson(expectField(j, "c1w"));
    c.c1b = rationalFromJson(expectField(j, "c1b"));
    c.c1sq = rationalFromJson(expectField(j, "c1sq"));
    c.ch2 = rationalFromJson(expectField(j, "ch2"));
    c.w2 = rationalFromJson(expectField(j, "w2"));
    c.bw = rationalFromJson(expectField(j, "bw"));
    c.b2 = rationalFromJson(expectField(j, "b2"));
    return c;
}

namespace {

Json declToJson(const SurfaceClass& c, const SheafDeclarations& d) {
    Json j = toJson(c);
    Json wrap;
    wrap["class"] = std::move(j);
    wrap["muSemistable"] = d.muSemistable;
    wrap["torsion"] = d.torsion;
    wrap["torsionFree"] = d.torsionFree;
    return wrap;
}

SheafDeclarations declFromJson(const Json& j) {
    SheafDeclarations d;
    if (j.contains("muSemistable")) d.muSemistable = j.at("muSemistable").get<bool>();
    if (j.contains("torsion")) d.torsion = j.at("torsion").get<bool>();
    if (j.contains("torsionFree")) d.torsionFree = j.at("torsionFree").get<bool>();
    return d;
}

}  // namespace

Json toJson(const SurfaceInput& c) {
    Json j = Json::object();
    if (c.hMinus1) j["hMinus1"] = declToJson(*c.hMinus1, c.hMinus1Decl);
    if (c.h0) j["h0"] = declToJson(*c.h0, c.h0Decl);
    return j;
}

SurfaceInput surfaceInputFromJson(const Json& j) {
    SurfaceInput in;
    if (j.contains("hMinus1") && !j.at("hMinus1").is_null()) {
        in.hMinus1 = surfaceClassFromJson(expectField(j.at("hMinus1"), "class"));
        in.hMinus1Decl = declFromJson(j.at("hMinus1"));
    }
    if (j.contains("h0") && !j.at("h0").is_null()) {
        in.h0 = surfaceClassFromJson(expectField(j.at("h0"), "class"));
        in.h0Decl = declFromJson(j.at("h0"));
    }
    return in;
}

Json loadJsonFile(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open file: " + path);
    try {
        return Json::parse(in);
    } catch (const std::exception& e) {
        throw ParseError("JSON parse error in " + path + ": " + e.what());
    }
}

}  // namespace polystab
