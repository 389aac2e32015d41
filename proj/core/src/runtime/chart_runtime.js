// Copyright 2026 The reqviz Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Dependency-free SVG renderer for reqviz chart documents. Reads the
// document from #chartdoc and the interaction flags from #runtime-flags,
// and draws into #chart.
(function () {
  "use strict";

  var SVG_NS = "http://www.w3.org/2000/svg";
  var WIDTH = 800;
  var HEIGHT = 460;

  var doc = JSON.parse(document.getElementById("chartdoc").textContent);
  var flags = JSON.parse(document.getElementById("runtime-flags").textContent);
  var root = document.getElementById("chart");
  var hidden = {};
  var tooltip = null;

  function svgEl(name, attrs, parent) {
    var node = document.createElementNS(SVG_NS, name);
    Object.keys(attrs || {}).forEach(function (k) {
      node.setAttribute(k, String(attrs[k]));
    });
    if (parent) parent.appendChild(node);
    return node;
  }

  function htmlEl(name, parent, text) {
    var node = document.createElement(name);
    if (text !== undefined) node.textContent = text;
    if (parent) parent.appendChild(node);
    return node;
  }

  function enc(channel) {
    return doc.encodings[channel] || null;
  }

  function attr(channel) {
    var e = enc(channel);
    return e ? e.attribute : null;
  }

  function isQuantitative(e) {
    return !!e && (e.scale_type === "interval" || e.scale_type === "ratio");
  }

  function toNumber(v) {
    if (typeof v === "number") return v;
    var t = Date.parse(v);
    return isNaN(t) ? NaN : t;
  }

  function compare(a, b) {
    if (typeof a === "number" && typeof b === "number") return a - b;
    var ta = toNumber(a);
    var tb = toNumber(b);
    if (!isNaN(ta) && !isNaN(tb)) return ta - tb;
    a = String(a);
    b = String(b);
    return a < b ? -1 : a > b ? 1 : 0;
  }

  // Ascending by the order-role attribute, stable; hidden legend entries removed.
  function orderedRows() {
    var orderKey = null;
    Object.keys(doc.encodings).forEach(function (ch) {
      if (doc.encodings[ch].order_role) orderKey = doc.encodings[ch].attribute;
    });
    var indexed = doc.data.map(function (row, i) {
      return { row: row, i: i };
    });
    if (orderKey) {
      indexed.sort(function (a, b) {
        return compare(a.row[orderKey], b.row[orderKey]) || a.i - b.i;
      });
    }
    var colorKey = attr("color");
    return indexed
      .map(function (r) {
        return r.row;
      })
      .filter(function (row) {
        return !(colorKey && hidden[String(row[colorKey])]);
      });
  }

  function distinct(rows, key) {
    var seen = {};
    var out = [];
    rows.forEach(function (row) {
      var k = String(row[key]);
      if (!seen[k]) {
        seen[k] = true;
        out.push(row[key]);
      }
    });
    return out;
  }

  function extent(values, e, includeZero) {
    var lo = Infinity;
    var hi = -Infinity;
    values.forEach(function (v) {
      if (v < lo) lo = v;
      if (v > hi) hi = v;
    });
    if (includeZero) {
      lo = Math.min(lo, 0);
      hi = Math.max(hi, 0);
    }
    if (e && e.min !== null && e.min !== undefined) lo = e.min;
    if (e && e.max !== null && e.max !== undefined) hi = e.max;
    if (!isFinite(lo) || !isFinite(hi)) {
      lo = 0;
      hi = 1;
    }
    if (lo === hi) hi = lo + 1;
    return [lo, hi];
  }

  function linear(domain, range) {
    var scale = function (v) {
      return range[0] + ((v - domain[0]) / (domain[1] - domain[0])) * (range[1] - range[0]);
    };
    scale.domain = domain;
    return scale;
  }

  function band(domain, range, padding) {
    var step = (range[1] - range[0]) / Math.max(domain.length, 1);
    var index = {};
    domain.forEach(function (d, i) {
      index[String(d)] = i;
    });
    var scale = function (v) {
      return range[0] + index[String(v)] * step + (step * padding) / 2;
    };
    scale.width = step * (1 - padding);
    scale.domain = domain;
    return scale;
  }

  function ticks(domain, count) {
    var span = domain[1] - domain[0];
    var raw = span / count;
    var mag = Math.pow(10, Math.floor(Math.log(raw) / Math.LN10));
    var norm = raw / mag;
    var step = (norm >= 5 ? 10 : norm >= 2 ? 5 : norm >= 1 ? 2 : 1) * mag;
    var out = [];
    for (var v = Math.ceil(domain[0] / step) * step; v <= domain[1] + step * 1e-9; v += step) {
      out.push(Math.abs(v) < step * 1e-9 ? 0 : v);
    }
    return out;
  }

  var palette =
    doc.color_range && doc.color_range.colors && doc.color_range.colors.length
      ? doc.color_range.colors
      : ["#0072b2"];

  function colorScale(domain) {
    var keys = domain.map(String);
    return function (v) {
      var i = keys.indexOf(String(v));
      return palette[(i < 0 ? 0 : i) % palette.length];
    };
  }

  function format(v, e) {
    if (typeof v !== "number") return String(v);
    if (e && e.scale_type === "interval" && Math.abs(v) > 1e11) {
      return new Date(v).toISOString().slice(0, 10);
    }
    return (Math.round(v * 100) / 100).toLocaleString("en-US");
  }

  function describe(row) {
    return Object.keys(row)
      .map(function (k) {
        return k + ": " + format(row[k]);
      })
      .join("\n");
  }

  function tip(node, text) {
    if (!flags.tooltips) return;
    node.addEventListener("mousemove", function (ev) {
      tooltip.textContent = text;
      tooltip.style.display = "block";
      tooltip.style.left = ev.offsetX + 14 + "px";
      tooltip.style.top = ev.offsetY + 14 + "px";
    });
    node.addEventListener("mouseleave", function () {
      tooltip.style.display = "none";
    });
  }

  // --- axes -----------------------------------------------------------------

  function axisLabel(g, text, x, y, rotate) {
    var t = svgEl(
      "text",
      { x: x, y: y, "text-anchor": "middle", "font-size": 12, fill: "#444" },
      g
    );
    if (rotate) t.setAttribute("transform", "rotate(-90 " + x + " " + y + ")");
    t.textContent = text;
  }

  function drawBandAxis(g, scale, plot, vertical, title) {
    scale.domain.forEach(function (d) {
      var pos = scale(d) + scale.width / 2;
      var t = vertical
        ? svgEl("text", { x: -8, y: pos + 4, "text-anchor": "end", "font-size": 11 }, g)
        : svgEl("text", { x: pos, y: plot.h + 18, "text-anchor": "middle", "font-size": 11 }, g);
      t.textContent = String(d);
    });
    if (vertical) {
      svgEl("line", { x1: 0, y1: 0, x2: 0, y2: plot.h, stroke: "#888" }, g);
      axisLabel(g, title, -70, plot.h / 2, true);
    } else {
      svgEl("line", { x1: 0, y1: plot.h, x2: plot.w, y2: plot.h, stroke: "#888" }, g);
      axisLabel(g, title, plot.w / 2, plot.h + 44);
    }
  }

  function drawLinearAxis(g, scale, plot, vertical, title, e) {
    ticks(scale.domain, 5).forEach(function (v) {
      var pos = scale(v);
      if (vertical) {
        svgEl("line", { x1: 0, y1: pos, x2: plot.w, y2: pos, stroke: "#eee" }, g);
        svgEl("text", { x: -8, y: pos + 4, "text-anchor": "end", "font-size": 11 }, g).textContent =
          format(v, e);
      } else {
        svgEl("line", { x1: pos, y1: 0, x2: pos, y2: plot.h, stroke: "#eee" }, g);
        svgEl("text", { x: pos, y: plot.h + 18, "text-anchor": "middle", "font-size": 11 }, g)
          .textContent = format(v, e);
      }
    });
    if (vertical) {
      svgEl("line", { x1: 0, y1: 0, x2: 0, y2: plot.h, stroke: "#888" }, g);
      axisLabel(g, title, -70, plot.h / 2, true);
    } else {
      svgEl("line", { x1: 0, y1: plot.h, x2: plot.w, y2: plot.h, stroke: "#888" }, g);
      axisLabel(g, title, plot.w / 2, plot.h + 44);
    }
  }

  // --- graphic types --------------------------------------------------------

  function bars(g, plot, stacked) {
    var horizontal = doc.orientation === "horizontal";
    var catKey = attr("x");
    var valKey = attr("y");
    var colKey = attr("color");
    var rows = orderedRows();
    var cats = distinct(rows, catKey);
    var series = colKey ? distinct(rows, colKey) : [null];
    var color = colorScale(colKey ? distinct(doc.data, colKey) : []);
    var sums = {};
    var totals = {};
    rows.forEach(function (row) {
      var k = String(row[catKey]) + "\u0000" + (colKey ? String(row[colKey]) : "");
      sums[k] = (sums[k] || 0) + row[valKey];
      totals[String(row[catKey])] = (totals[String(row[catKey])] || 0) + row[valKey];
    });
    var values = Object.keys(stacked ? totals : sums).map(function (k) {
      return (stacked ? totals : sums)[k];
    });
    var domain = extent(values, enc("y"), true);
    var catScale = band(cats, horizontal ? [0, plot.h] : [0, plot.w], 0.2);
    var valScale = linear(domain, horizontal ? [0, plot.w] : [plot.h, 0]);
    if (horizontal) {
      drawLinearAxis(g, valScale, plot, false, valKey, enc("y"));
      drawBandAxis(g, catScale, plot, true, catKey);
    } else {
      drawLinearAxis(g, valScale, plot, true, valKey, enc("y"));
      drawBandAxis(g, catScale, plot, false, catKey);
    }
    cats.forEach(function (cat) {
      var offset = 0;
      series.forEach(function (s, si) {
        var key = String(cat) + "\u0000" + (colKey ? String(s) : "");
        var v = sums[key];
        if (v === undefined) return;
        var from = stacked ? offset : 0;
        var to = from + v;
        if (stacked) offset = to;
        var thickness = stacked ? catScale.width : catScale.width / series.length;
        var pos = catScale(cat) + (stacked ? 0 : si * thickness);
        var a = valScale(Math.min(from, to));
        var b = valScale(Math.max(from, to));
        var rect = horizontal
          ? svgEl("rect", { x: a, y: pos, width: Math.max(b - a, 0), height: thickness }, g)
          : svgEl("rect", { x: pos, y: b, width: thickness, height: Math.max(a - b, 0) }, g);
        rect.setAttribute("fill", color(colKey ? s : undefined));
        var label = catKey + ": " + cat + (colKey ? "\n" + colKey + ": " + s : "");
        tip(rect, label + "\n" + valKey + ": " + format(v));
      });
    });
  }

  function lines(g, plot, filled) {
    var xKey = attr("x");
    var yKey = attr("y");
    var colKey = attr("color");
    var rows = orderedRows();
    var quantX = isQuantitative(enc("x"));
    var xScale;
    var xPos;
    if (quantX) {
      xScale = linear(
        extent(
          rows.map(function (r) {
            return toNumber(r[xKey]);
          }),
          enc("x"),
          false
        ),
        [0, plot.w]
      );
      xPos = function (row) {
        return xScale(toNumber(row[xKey]));
      };
      drawLinearAxis(g, xScale, plot, false, xKey, enc("x"));
    } else {
      xScale = band(distinct(rows, xKey), [0, plot.w], 0);
      xPos = function (row) {
        return xScale(row[xKey]) + xScale.width / 2;
      };
      drawBandAxis(g, xScale, plot, false, xKey);
    }
    var yDomain = extent(
      rows.map(function (r) {
        return r[yKey];
      }),
      enc("y"),
      filled
    );
    var yScale = linear(yDomain, [plot.h, 0]);
    drawLinearAxis(g, yScale, plot, true, yKey, enc("y"));
    var series = colKey ? distinct(rows, colKey) : [null];
    var color = colorScale(colKey ? distinct(doc.data, colKey) : []);
    series.forEach(function (s) {
      var pts = rows.filter(function (r) {
        return !colKey || String(r[colKey]) === String(s);
      });
      if (!pts.length) return;
      var d = pts
        .map(function (r, i) {
          return (i ? "L" : "M") + xPos(r) + " " + yScale(r[yKey]);
        })
        .join(" ");
      var stroke = color(colKey ? s : undefined);
      if (filled) {
        var base = yScale(Math.max(yDomain[0], 0));
        var area = d + " L" + xPos(pts[pts.length - 1]) + " " + base + " L" + xPos(pts[0]) + " " + base + " Z";
        svgEl("path", { d: area, fill: stroke, "fill-opacity": 0.35, stroke: "none" }, g);
      }
      svgEl("path", { d: d, fill: "none", stroke: stroke, "stroke-width": 2 }, g);
      pts.forEach(function (r) {
        var dot = svgEl("circle", { cx: xPos(r), cy: yScale(r[yKey]), r: 3, fill: stroke }, g);
        tip(dot, describe(r));
      });
    });
  }

  function pie(g, plot) {
    var catKey = attr("x") || attr("color");
    var valKey = attr("y");
    var rows = orderedRows();
    var cats = distinct(rows, catKey);
    var color = colorScale(distinct(doc.data, catKey));
    var sums = {};
    var total = 0;
    rows.forEach(function (row) {
      sums[String(row[catKey])] = (sums[String(row[catKey])] || 0) + Math.max(row[valKey], 0);
      total += Math.max(row[valKey], 0);
    });
    var cx = plot.w / 2;
    var cy = plot.h / 2;
    var radius = Math.min(plot.w, plot.h) / 2 - 10;
    var angle = -Math.PI / 2;
    cats.forEach(function (cat) {
      var v = sums[String(cat)];
      if (!total || !v) return;
      var sweep = (v / total) * Math.PI * 2;
      var x0 = cx + radius * Math.cos(angle);
      var y0 = cy + radius * Math.sin(angle);
      angle += sweep;
      var x1 = cx + radius * Math.cos(angle);
      var y1 = cy + radius * Math.sin(angle);
      var d =
        sweep >= Math.PI * 2 - 1e-9
          ? "M" + (cx - radius) + " " + cy + " a" + radius + " " + radius + " 0 1 0 " + 2 * radius + " 0 a" + radius + " " + radius + " 0 1 0 " + -2 * radius + " 0"
          : "M" + cx + " " + cy + " L" + x0 + " " + y0 + " A" + radius + " " + radius + " 0 " + (sweep > Math.PI ? 1 : 0) + " 1 " + x1 + " " + y1 + " Z";
      var slice = svgEl("path", { d: d, fill: color(cat), stroke: "#fff" }, g);
      tip(slice, catKey + ": " + cat + "\n" + valKey + ": " + format(v));
    });
  }

  function histogram(g, plot) {
    var horizontal = doc.orientation === "horizontal";
    var valKey = attr("y") || attr("x");
    var e = attr("y") ? enc("y") : enc("x");
    var values = orderedRows().map(function (r) {
      return toNumber(r[valKey]);
    });
    var domain = extent(values, e, false);
    var binCount = Math.max(1, Math.min(20, Math.ceil(Math.sqrt(values.length))));
    var width = (domain[1] - domain[0]) / binCount;
    var counts = [];
    for (var i = 0; i < binCount; i++) counts.push(0);
    values.forEach(function (v) {
      if (v < domain[0] || v > domain[1]) return;
      counts[Math.min(binCount - 1, Math.floor((v - domain[0]) / width))]++;
    });
    var valScale = linear(domain, horizontal ? [plot.h, 0] : [0, plot.w]);
    var countScale = linear(extent(counts, null, true), horizontal ? [0, plot.w] : [plot.h, 0]);
    drawLinearAxis(g, valScale, plot, horizontal, valKey, e);
    drawLinearAxis(g, countScale, plot, !horizontal, "count", null);
    counts.forEach(function (c, i) {
      var lo = domain[0] + i * width;
      var a = valScale(lo);
      var b = valScale(lo + width);
      var rect = horizontal
        ? svgEl("rect", { x: 0, y: b, width: countScale(c), height: Math.max(a - b - 1, 0) }, g)
        : svgEl("rect", { x: a, y: countScale(c), width: Math.max(b - a - 1, 0), height: plot.h - countScale(c) }, g);
      rect.setAttribute("fill", palette[0]);
      tip(rect, valKey + ": " + format(lo) + " .. " + format(lo + width) + "\ncount: " + c);
    });
  }

  function points(g, plot, sized) {
    var xKey = attr("x");
    var yKey = attr("y");
    var sizeKey = sized ? attr("size") : null;
    var colKey = attr("color");
    var rows = orderedRows();
    var xScale = linear(
      extent(
        rows.map(function (r) {
          return toNumber(r[xKey]);
        }),
        enc("x"),
        false
      ),
      [0, plot.w]
    );
    var yScale = linear(
      extent(
        rows.map(function (r) {
          return toNumber(r[yKey]);
        }),
        enc("y"),
        false
      ),
      [plot.h, 0]
    );
    drawLinearAxis(g, xScale, plot, false, xKey, enc("x"));
    drawLinearAxis(g, yScale, plot, true, yKey, enc("y"));
    var sizeMax = 1;
    if (sizeKey) {
      rows.forEach(function (r) {
        sizeMax = Math.max(sizeMax, Math.abs(toNumber(r[sizeKey])) || 0);
      });
    }
    var color = colorScale(colKey ? distinct(doc.data, colKey) : []);
    rows.forEach(function (r) {
      var radius = sizeKey ? 3 + 17 * Math.sqrt(Math.abs(toNumber(r[sizeKey])) / sizeMax) : 4;
      var dot = svgEl(
        "circle",
        {
          cx: xScale(toNumber(r[xKey])),
          cy: yScale(toNumber(r[yKey])),
          r: radius,
          fill: color(colKey ? r[colKey] : undefined),
          "fill-opacity": 0.7,
        },
        g
      );
      tip(dot, describe(r));
    });
  }

  function heatmap(g, plot) {
    var xKey = attr("x");
    var rowKey = attr("color") || attr("detail");
    var valKey = attr("y");
    var rows = orderedRows();
    var cols = distinct(rows, xKey);
    var lanes = rowKey ? distinct(rows, rowKey) : [null];
    var sums = {};
    rows.forEach(function (r) {
      var k = String(r[xKey]) + "\u0000" + (rowKey ? String(r[rowKey]) : "");
      sums[k] = (sums[k] || 0) + r[valKey];
    });
    var values = Object.keys(sums).map(function (k) {
      return sums[k];
    });
    var domain = extent(values, enc("y"), false);
    var xScale = band(cols, [0, plot.w], 0.05);
    var yScale = band(lanes, [0, plot.h], 0.05);
    drawBandAxis(g, xScale, plot, false, xKey);
    if (rowKey) drawBandAxis(g, yScale, plot, true, rowKey);
    var base = palette[palette.length > 5 ? 5 : 0];
    cols.forEach(function (c) {
      lanes.forEach(function (l) {
        var v = sums[String(c) + "\u0000" + (rowKey ? String(l) : "")];
        if (v === undefined) return;
        var cell = svgEl(
          "rect",
          {
            x: xScale(c),
            y: yScale(l),
            width: xScale.width,
            height: yScale.width,
            fill: base,
            "fill-opacity": 0.15 + (0.85 * (v - domain[0])) / (domain[1] - domain[0]),
          },
          g
        );
        tip(cell, xKey + ": " + c + (rowKey ? "\n" + rowKey + ": " + l : "") + "\n" + valKey + ": " + format(v));
      });
    });
  }

  function table(container) {
    var keys = ["x", "y", "color", "size", "detail"]
      .map(attr)
      .filter(function (k) {
        return k;
      });
    var t = htmlEl("table", container);
    t.setAttribute("class", "reqviz-table");
    var head = htmlEl("tr", htmlEl("thead", t));
    keys.forEach(function (k) {
      htmlEl("th", head, k);
    });
    var bodyEl = htmlEl("tbody", t);
    orderedRows().forEach(function (r) {
      var tr = htmlEl("tr", bodyEl);
      keys.forEach(function (k) {
        htmlEl("td", tr, format(r[k]));
      });
    });
  }

  function card(container) {
    var key = null;
    var e = null;
    ["y", "x", "size", "color", "detail"].forEach(function (ch) {
      if (!key && attr(ch)) {
        key = attr(ch);
        e = enc(ch);
      }
    });
    var rows = orderedRows();
    var box = htmlEl("div", container);
    box.setAttribute("class", "reqviz-card");
    if (isQuantitative(e) && rows.every(function (r) { return typeof r[key] === "number"; })) {
      box.textContent = format(
        rows.reduce(function (acc, r) {
          return acc + r[key];
        }, 0)
      );
      htmlEl("small", box, "total " + key);
    } else {
      box.textContent = String(distinct(rows, key).length);
      htmlEl("small", box, "distinct " + key);
    }
  }

  // --- legend and interaction ----------------------------------------------

  function drawLegend(svg, domain, color, layout) {
    if (!doc.legend) return;
    var lg = doc.legend;
    var size = lg.text_size || 12;
    var g = svgEl("g", { "font-family": lg.font_family, "font-size": size }, svg);
    var horizontal = lg.position === "top" || lg.position === "bottom";
    var x = lg.position === "left" ? 10 : lg.position === "right" ? WIDTH - layout.right + 20 : layout.left;
    var y = lg.position === "bottom" ? HEIGHT - 20 : lg.position === "top" ? 14 : layout.top + 10;
    svgEl("text", { x: x, y: y, "font-weight": "bold" }, g).textContent = lg.title;
    domain.forEach(function (v, i) {
      var ix = horizontal ? x + 120 + i * 110 : x;
      var iy = horizontal ? y : y + (i + 1) * (size + 8);
      var item = svgEl("g", { cursor: flags.legend_filter ? "pointer" : "default" }, g);
      if (lg.type === "swatch") {
        svgEl("rect", { x: ix, y: iy - size, width: size + 4, height: size + 4, fill: color(v) }, item);
      } else {
        svgEl("circle", { cx: ix + size / 2, cy: iy - size / 3, r: size / 3, fill: color(v) }, item);
      }
      var label = svgEl("text", { x: ix + size + 10, y: iy }, item);
      label.textContent = String(v);
      if (hidden[String(v)]) item.setAttribute("opacity", 0.35);
      if (flags.legend_filter) {
        item.addEventListener("click", function () {
          hidden[String(v)] = !hidden[String(v)];
          render();
        });
      }
    });
  }

  function enablePanZoom(svg) {
    var box = [0, 0, WIDTH, HEIGHT];
    var drag = null;
    function apply() {
      svg.setAttribute("viewBox", box.join(" "));
    }
    svg.addEventListener("wheel", function (ev) {
      ev.preventDefault();
      var k = ev.deltaY > 0 ? 1.1 : 1 / 1.1;
      var cx = box[0] + box[2] / 2;
      var cy = box[1] + box[3] / 2;
      box[2] *= k;
      box[3] *= k;
      box[0] = cx - box[2] / 2;
      box[1] = cy - box[3] / 2;
      apply();
    });
    svg.addEventListener("mousedown", function (ev) {
      drag = { x: ev.clientX, y: ev.clientY, box: box.slice() };
    });
    svg.addEventListener("mousemove", function (ev) {
      if (!drag) return;
      var scale = box[2] / WIDTH;
      box[0] = drag.box[0] - (ev.clientX - drag.x) * scale;
      box[1] = drag.box[1] - (ev.clientY - drag.y) * scale;
      apply();
    });
    svg.addEventListener("mouseup", function () {
      drag = null;
    });
    svg.addEventListener("dblclick", function () {
      box = [0, 0, WIDTH, HEIGHT];
      apply();
    });
  }

  function render() {
    while (root.firstChild) root.removeChild(root.firstChild);
    tooltip = htmlEl("div", root);
    tooltip.setAttribute("class", "reqviz-tooltip");
    var type = doc.graphic_type;
    if (type === "table") return table(root);
    if (type === "single_value_card") return card(root);

    var legendKey = type === "pie_chart" ? attr("x") || attr("color") : attr("color");
    var legendSide = doc.legend && legendKey ? doc.legend.position : null;
    var layout = {
      top: legendSide === "top" ? 40 : 20,
      right: legendSide === "right" ? 180 : 20,
      bottom: legendSide === "bottom" ? 100 : 70,
      left: legendSide === "left" ? 240 : 90,
    };
    var svg = svgEl("svg", {
      xmlns: SVG_NS,
      viewBox: "0 0 " + WIDTH + " " + HEIGHT,
      width: WIDTH,
      height: HEIGHT,
      role: "img",
    });
    root.appendChild(svg);
    svgEl("title", {}, svg).textContent = doc.title;
    var plot = { w: WIDTH - layout.left - layout.right, h: HEIGHT - layout.top - layout.bottom };
    var g = svgEl("g", { transform: "translate(" + layout.left + "," + layout.top + ")" }, svg);

    if (type === "column_chart" || type === "bar_chart") bars(g, plot, false);
    else if (type === "stacked_column_chart") bars(g, plot, true);
    else if (type === "line_chart") lines(g, plot, false);
    else if (type === "area_chart") lines(g, plot, true);
    else if (type === "pie_chart") pie(g, plot);
    else if (type === "histogram") histogram(g, plot);
    else if (type === "scatter_plot") points(g, plot, false);
    else if (type === "bubble_chart") points(g, plot, true);
    else if (type === "heatmap") heatmap(g, plot);
    else svgEl("text", { x: 10, y: 20 }, g).textContent = "Unsupported graphic type: " + type;

    if (legendKey) drawLegend(svg, distinct(doc.data, legendKey), colorScale(distinct(doc.data, legendKey)), layout);
    if (flags.pan_zoom) enablePanZoom(svg);
  }

  render();
})();
