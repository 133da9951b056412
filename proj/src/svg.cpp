#include "cmlocus/svg.hpp"

#include <cmath>
#include <cstdio>

namespace cmlocus {

namespace {

std::string num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.4f", v);
    return buf;
}

}  // namespace

std::string render_svg(const Arrangement& a, const PlotStyle& style) {
    const double S = style.size;
    const double cx = 0.5 * S, cy = 0.5 * S;
    const double R = 0.42 * S;
    const std::vector<double>& th = a.ensemble().thetas();

    std::string out;
    out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" +
           num(S) + "\" height=\"" + num(S) + "\" viewBox=\"0 0 " + num(S) + " " +
           num(S) + "\">\n";
    out += "<rect width=\"" + num(S) + "\" height=\"" + num(S) + "\" fill=\"white\"/>\n";

    // Lines at visual angle theta/2; SVG y axis points down, so flip y.
    for (std::size_t i = 0; i < a.size(); ++i) {
        double phi = 0.5 * th[i];
        double dx = std::cos(phi) * R;
        double dy = std::sin(phi) * R;
        out += "<line x1=\"" + num(cx - dx) + "\" y1=\"" + num(cy + dy) +
               "\" x2=\"" + num(cx + dx) + "\" y2=\"" + num(cy - dy) +
               "\" stroke=\"#204080\" stroke-width=\"" +
               num(style.stroke_unit * a.multiplicities()[i]) + "\"/>\n";
    }

    // Inset: particles at the full angles theta_i on a small circle.
    const double icx = 0.83 * S, icy = 0.83 * S, ir = 0.12 * S;
    out += "<circle cx=\"" + num(icx) + "\" cy=\"" + num(icy) + "\" r=\"" + num(ir) +
           "\" fill=\"none\" stroke=\"#808080\" stroke-width=\"1\"/>\n";
    for (std::size_t i = 0; i < a.size(); ++i) {
        double px = icx + ir * std::cos(th[i]);
        double py = icy - ir * std::sin(th[i]);
        out += "<circle cx=\"" + num(px) + "\" cy=\"" + num(py) +
               "\" r=\"3\" fill=\"#c03020\"/>\n";
        out += "<text x=\"" + num(px + 5.0) + "\" y=\"" + num(py - 5.0) +
               "\" font-size=\"10\" font-family=\"sans-serif\">" +
               std::to_string(a.ensemble().charges()[i]) + "</text>\n";
    }
    out += "</svg>\n";
    return out;
}

}  // namespace cmlocus
