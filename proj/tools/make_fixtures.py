#!/usr/bin/env python3
"""Writes the shipped model fixtures under data/fixtures/.

Output is already in canonical form (sorted keys, two-space indent, integral
numbers written without a fraction) so that the C++ writer reproduces the
files byte for byte. Run from the repository root.
"""
import json
import pathlib

OUT = pathlib.Path(__file__).resolve().parent.parent / "data" / "fixtures"


def var(name, domain, codes=None, unit="1", rng=None, latent=False):
    return {
        "codes": codes if codes is not None else list(range(len(domain))),
        "domain": domain,
        "latent": latent,
        "name": name,
        "range": rng if rng is not None else "{" + ", ".join(domain) + "}",
        "unit": unit,
    }


def cpd(child, parents, table):
    return {"child": child, "parents": parents, "table": table}


def model_file(variables, edges, phenomenon, metric, cpds, context=None, bidirected=None):
    return {
        "bidirected": bidirected or [],
        "context": context or {"individuals": [], "statements": []},
        "cpds": sorted(cpds, key=lambda c: c["child"]),
        "edges": sorted(edges),
        "format_version": 1,
        "metric": {"variable": metric},
        "phenomenon": phenomenon,
        "variables": sorted(variables, key=lambda v: v["name"]),
    }


def heavy_rain(model_variant):
    third = "V2" if model_variant else "V3"
    variables = [
        var("V1", ["Summer", "Winter"], unit="1"),
        var("V2", ["Slow", "Fast"], unit="m/s"),
        var("X", ["CP", "notCP"], codes=[1, 0], unit="1"),
        var("phi", ["Short", "Long"], codes=[1, 0], unit="m"),
    ]
    if not model_variant:
        variables.append(var("V3", ["Oceanic", "Continental"], unit="1"))
    edges = [["V1", "X"], [third, "X"], ["X", "phi"], ["V2", "phi"]]
    cpds = [
        cpd("V1", [], [[0.5, 0.5]]),
        cpd("V2", [], [[0.6, 0.4]]),
        cpd("X", ["V1", third], [[0.6, 0.4], [0.8, 0.2], [0.7, 0.3], [0.6, 0.4]]),
        cpd("phi", ["V2", "X"], [[0.8, 0.2], [0.6, 0.4], [0.3, 0.7], [0.1, 0.9]]),
    ]
    if not model_variant:
        cpds.append(cpd("V3", [], [[0.6, 0.4]]))
    return model_file(variables, edges, {"cp_label": "CP", "variable": "X"}, "phi", cpds)


LH = ["low", "high"]

# name, range, unit, latent
FRICTION_VARIABLES = [
    ("date_time_of_day", "{0..23} x {0..59}", "1", False),
    ("global_location", "[-pi/2, pi/2] x [-pi, pi]", "rad", False),
    ("weather", "{warm, cold, ...} x {clear sky, cloudy, ...}", "1", False),
    ("humidity", "[0, inf)", "%", False),
    ("dew_point", "[0, inf)", "K", False),
    ("precipitation", "[0, inf)", "mm/(m^2 h)", False),
    ("road_list", "{road_1, ..., road_n}", "1", False),
    ("ego_relative_position", "(-inf, inf)^3", "m", False),
    ("ego_speed_limit", "[0, inf)", "m/s", False),
    ("ego_distance_to_isrl", "[0, inf)", "m", False),
    ("ego_target_position", "(-inf, inf)^3", "m", False),
    ("ego_road_curvature", "[0, inf)", "1/m", False),
    ("global_illumination", "[0, inf)", "cd/m^2", False),
    ("air_temperature", "[0, inf)", "K", False),
    ("degree_of_wetness", "[0, inf)", "m", False),
    ("winter_slipperiness", "[0, 100]", "%", False),
    ("road_surface_material", "{asphalt, gravel, ...}", "1", False),
    ("road_surface_contamination", "[0, inf)^n", "1", False),
    ("road_surface_degradation", "{0, ..., 100}", "1", False),
    ("road_surface_roughness", "[0, inf)", "m", False),
    ("planned_steering", "[-pi/2, pi/2]", "rad", False),
    ("planned_acceleration", "[0, inf)", "m/s^2", False),
    ("ego_tire_temperature", "[0, inf)", "K", False),
    ("ego_tire_flash_temperature", "[0, inf)", "K", False),
    ("tire_type", "{Touring, Winter, ...}", "1", False),
    ("wet_grip", "{A, B, C, E, F}", "1", False),
    ("tire_pressure", "[0, inf)", "N/m^2", False),
    ("max_braking_torque", "[0, inf)", "Nm", False),
    ("ego_vehicle_mass", "(0, inf)", "kg", False),
    ("ego_forward_velocity", "R^3", "m/s", False),
    ("ego_hub_velocity", "R^3", "m/s", False),
    ("max_avail_long_dec", "[0, inf)", "m/s^2", True),
    ("max_avail_lat_dec", "[0, inf)", "m/s^2", True),
    ("max_req_long_dec", "[0, inf)", "m/s^2", True),
    ("max_req_lat_dec", "[0, inf)", "m/s^2", True),
    ("stn_dt", "[0, inf)", "1", True),
    ("btn_dt", "[0, inf)", "1", True),
    # Adjustment-set members that have no row in the variable catalog.
    ("ego_longitudinal_wheel_slip", "[-1, 1]", "1", False),
    ("ego_slip_angle", "[-pi/2, pi/2]", "rad", False),
]

FRICTION_EDGES = [
    ("date_time_of_day", ["global_illumination", "air_temperature", "weather", "tire_type"]),
    ("global_location", ["weather", "air_temperature", "road_list", "tire_type"]),
    ("weather", ["humidity", "precipitation", "air_temperature", "road_surface_contamination"]),
    ("humidity", ["dew_point"]),
    ("air_temperature", ["dew_point", "winter_slipperiness", "ego_tire_temperature"]),
    ("dew_point", ["degree_of_wetness"]),
    ("precipitation", ["degree_of_wetness", "winter_slipperiness"]),
    ("road_list", ["ego_relative_position", "road_surface_material", "road_surface_degradation",
                   "ego_target_position"]),
    ("ego_relative_position", ["ego_speed_limit", "ego_road_curvature", "ego_distance_to_isrl",
                               "road_surface_contamination", "planned_steering"]),
    ("ego_road_curvature", ["planned_steering", "ego_forward_velocity"]),
    ("ego_speed_limit", ["ego_forward_velocity", "planned_acceleration"]),
    ("ego_distance_to_isrl", ["planned_acceleration"]),
    ("ego_target_position", ["planned_steering", "planned_acceleration"]),
    ("global_illumination", ["ego_forward_velocity"]),
    ("degree_of_wetness", ["ego_forward_velocity", "coefficient_of_friction"]),
    ("winter_slipperiness", ["ego_forward_velocity", "coefficient_of_friction"]),
    ("road_surface_material", ["road_surface_roughness", "coefficient_of_friction"]),
    ("road_surface_degradation", ["road_surface_roughness"]),
    ("road_surface_contamination", ["coefficient_of_friction"]),
    ("road_surface_roughness", ["coefficient_of_friction"]),
    ("ego_forward_velocity", ["ego_hub_velocity", "ego_tire_temperature", "ego_tire_flash_temperature",
                              "ego_slip_angle", "coefficient_of_friction", "max_req_long_dec"]),
    ("ego_hub_velocity", ["ego_longitudinal_wheel_slip"]),
    ("planned_acceleration", ["ego_longitudinal_wheel_slip", "max_req_long_dec", "max_req_lat_dec"]),
    ("planned_steering", ["ego_slip_angle", "max_req_long_dec", "max_req_lat_dec"]),
    ("max_braking_torque", ["ego_longitudinal_wheel_slip", "max_avail_long_dec"]),
    ("ego_vehicle_mass", ["tire_pressure", "ego_slip_angle", "max_avail_long_dec"]),
    ("ego_tire_temperature", ["ego_tire_flash_temperature", "tire_pressure"]),
    ("ego_longitudinal_wheel_slip", ["ego_tire_flash_temperature", "coefficient_of_friction"]),
    ("ego_slip_angle", ["ego_tire_flash_temperature", "coefficient_of_friction"]),
    ("ego_tire_flash_temperature", ["coefficient_of_friction"]),
    ("tire_type", ["wet_grip", "coefficient_of_friction", "max_avail_long_dec"]),
    ("wet_grip", ["coefficient_of_friction", "max_avail_long_dec"]),
    ("tire_pressure", ["coefficient_of_friction"]),
    ("coefficient_of_friction", ["max_avail_long_dec", "max_avail_lat_dec"]),
    ("max_avail_long_dec", ["btn_dt"]),
    ("max_req_long_dec", ["btn_dt"]),
    ("max_avail_lat_dec", ["stn_dt"]),
    ("max_req_lat_dec", ["stn_dt"]),
    ("btn_dt", ["agg_btn_stn"]),
    ("stn_dt", ["agg_btn_stn"]),
]

FRICTION_CONTEXT = {
    "individuals": sorted([
        {"class": "road_network", "name": "road_network", "properties": ["layout"]},
        {"class": "roadside_structure", "name": "roadside_structures", "properties": []},
        {"class": "temporary_modification", "name": "temporary_modification", "properties": []},
        {"class": "vehicle", "name": "ego", "properties": []},
        {"class": "vehicle", "name": "other_relevant_vehicle", "properties": []},
        {"class": "environment", "name": "environment", "properties": []},
    ], key=lambda i: i["name"]),
    "statements": [
        {"kind": "existence", "layer": 1, "subject": "road_network"},
        {"expression": {"op": "!=", "property": "layout", "value": "straight"},
         "kind": "constraint", "layer": 1, "subject": "road_network"},
        {"kind": "absence", "layer": 3, "subject": "temporary_modification"},
        {"kind": "existence", "layer": 4, "subject": "ego"},
        {"kind": "absence", "layer": 4, "subject": "other_relevant_vehicle"},
        {"kind": "existence", "layer": 5, "subject": "environment"},
    ],
}


def friction():
    variables = [var(n, LH, unit=u, rng=r, latent=lat) for n, r, u, lat in FRICTION_VARIABLES]
    variables.append(var("coefficient_of_friction", ["reduced", "nominal"], codes=[1, 0],
                         unit="1", rng="[0, inf)"))
    variables.append(var("agg_btn_stn", LH, unit="1", rng="[0, inf)"))
    edges = [[a, b] for a, bs in FRICTION_EDGES for b in bs]
    return model_file(variables, edges, {"cp_label": "reduced", "variable": "coefficient_of_friction"},
                      "agg_btn_stn", [], context=FRICTION_CONTEXT)


def write(name, obj):
    text = json.dumps(obj, indent=2, sort_keys=True) + "\n"
    (OUT / name).write_text(text)


if __name__ == "__main__":
    OUT.mkdir(parents=True, exist_ok=True)
    write("heavy-rain-reality.json", heavy_rain(False))
    write("heavy-rain-model.json", heavy_rain(True))
    write("friction-relation.json", friction())
