"""Raw data tables of the modified 4-area RTS '96 system.

Values are transcribed unscaled; area scaling happens in :mod:`rts96.case.build`.
Bus numbers in the load, generator and line tables are local indices 1..24.
"""

# bus, type, gl, bl, base_kv, vmax, vmin  (Area 1; type 3 = slack)
AREA1_BUSES = (
    (101, 2, 0.0, 0.0, 138.0, 1.05, 0.95),
    (102, 2, 0.0, 0.0, 138.0, 1.05, 0.95),
    (103, 1, 0.0, 0.0, 138.0, 1.05, 0.95),
    (104, 1, 0.0, 0.0, 138.0, 1.05, 0.95),
    (105, 1, 0.0, 0.0, 138.0, 1.05, 0.95),
    (106, 1, 0.0, 100.0, 138.0, 1.05, 0.95),
    (107, 2, 0.0, 0.0, 138.0, 1.05, 0.95),
    (108, 1, 0.0, 0.0, 138.0, 1.05, 0.95),
    (109, 1, 0.0, 0.0, 138.0, 1.05, 0.95),
    (110, 1, 0.0, 0.0, 138.0, 1.05, 0.95),
    (111, 1, 0.0, 0.0, 230.0, 1.05, 0.95),
    (112, 1, 0.0, 0.0, 230.0, 1.05, 0.95),
    (113, 3, 0.0, 0.0, 230.0, 1.05, 0.95),
    (114, 2, 0.0, 0.0, 230.0, 1.05, 0.95),
    (115, 2, 0.0, 0.0, 230.0, 1.05, 0.95),
    (116, 2, 0.0, 0.0, 230.0, 1.05, 0.95),
    (117, 1, 0.0, 0.0, 230.0, 1.05, 0.95),
    (118, 2, 0.0, 0.0, 230.0, 1.05, 0.95),
    (119, 1, 0.0, 0.0, 230.0, 1.05, 0.95),
    (120, 1, 0.0, 0.0, 230.0, 1.05, 0.95),
    (121, 2, 0.0, 0.0, 230.0, 1.05, 0.95),
    (122, 2, 0.0, 0.0, 230.0, 1.05, 0.95),
    (123, 2, 0.0, 0.0, 230.0, 1.05, 0.95),
    (124, 1, 0.0, 0.0, 230.0, 1.05, 0.95),
)

# Areas 3 and 4 reuse these rows with their own id offset.
AREA2_BUSES = (
    (201, 2, 0.0, 0.0, 138.0, 1.05, 0.95),
    (202, 2, 0.0, 0.0, 138.0, 1.05, 0.95),
    (203, 1, 0.0, 0.0, 138.0, 1.05, 0.95),
    (204, 1, 0.0, 0.0, 138.0, 1.05, 0.95),
    (205, 1, 0.0, 0.0, 138.0, 1.05, 0.95),
    (206, 1, 0.0, 100.0, 138.0, 1.05, 0.95),
    (207, 2, 0.0, 0.0, 138.0, 1.05, 0.95),
    (208, 1, 0.0, 0.0, 138.0, 1.05, 0.95),
    (209, 1, 0.0, 0.0, 138.0, 1.05, 0.95),
    (210, 1, 0.0, 0.0, 138.0, 1.05, 0.95),
    (211, 1, 0.0, 0.0, 230.0, 1.05, 0.95),
    (212, 1, 0.0, 0.0, 230.0, 1.05, 0.95),
    (213, 2, 0.0, 0.0, 230.0, 1.05, 0.95),
    (214, 2, 0.0, 0.0, 230.0, 1.05, 0.95),
    (215, 2, 0.0, 0.0, 230.0, 1.05, 0.95),
    (216, 2, 0.0, 0.0, 230.0, 1.05, 0.95),
    (217, 1, 0.0, 0.0, 230.0, 1.05, 0.95),
    (218, 2, 0.0, 0.0, 230.0, 1.05, 0.95),
    (219, 1, 0.0, 0.0, 230.0, 1.05, 0.95),
    (220, 1, 0.0, 0.0, 230.0, 1.05, 0.95),
    (221, 2, 0.0, 0.0, 230.0, 1.05, 0.95),
    (222, 2, 0.0, 0.0, 230.0, 1.05, 0.95),
    (223, 2, 0.0, 0.0, 230.0, 1.05, 0.95),
    (224, 1, 0.0, 0.0, 230.0, 1.05, 0.95),
)

# id, local bus, peak MW (already +10%), utility $/MWh, i1, i2
LOADS = (
    ("D01", 1, 118.8, 39.21, 0, 1),
    ("D02", 2, 106.7, 35.21, 1, 0),
    ("D03", 3, 198.0, 65.35, 1, 0),
    ("D04", 4, 81.4, 26.89, 0, 1),
    ("D05", 5, 78.1, 25.79, 1, 0),
    ("D06", 6, 149.6, 49.42, 1, 0),
    ("D07", 7, 137.5, 45.42, 0, 1),
    ("D08", 8, 188.1, 62.11, 1, 0),
    ("D09", 9, 192.5, 63.56, 0, 1),
    ("D10", 10, 214.5, 80.82, 1, 0),
    ("D11", 13, 291.5, 96.97, 0, 1),
    ("D12", 14, 213.4, 70.45, 1, 0),
    ("D13", 15, 348.7, 112.07, 0, 1),
    ("D14", 16, 110.0, 36.34, 1, 0),
    ("D15", 18, 366.3, 135.88, 0, 1),
    ("D16", 19, 199.1, 65.71, 1, 0),
    ("D17", 20, 140.8, 46.49, 1, 0),
)

# id, local bus, pmax MW, qmin MVAr, qmax MVAr, cost $/MWh
GENERATORS = (
    ("G01", 1, 20.0, 0.0, 10.0, 130.0),
    ("G02", 1, 20.0, 0.0, 10.0, 130.0),
    ("G03", 1, 76.0, -25.0, 30.0, 16.08),
    ("G04", 1, 76.0, -25.0, 30.0, 16.08),
    ("G05", 2, 20.0, 0.0, 10.0, 130.0),
    ("G06", 2, 20.0, 0.0, 10.0, 130.0),
    ("G07", 2, 76.0, -25.0, 30.0, 16.08),
    ("G08", 2, 76.0, -25.0, 30.0, 16.08),
    ("G09", 7, 100.0, 0.0, 60.0, 43.66),
    ("G10", 7, 100.0, 0.0, 60.0, 43.66),
    ("G11", 7, 100.0, 0.0, 60.0, 43.66),
    ("G12", 13, 197.0, 0.0, 80.0, 48.58),
    ("G13", 13, 197.0, 0.0, 80.0, 48.58),
    ("G14", 13, 197.0, 0.0, 80.0, 48.58),
    ("G15", 14, 0.0, -50.0, 200.0, 0.0),
    ("G16", 15, 12.0, 0.0, 6.0, 56.56),
    ("G17", 15, 12.0, 0.0, 6.0, 56.56),
    ("G18", 15, 12.0, 0.0, 6.0, 56.56),
    ("G19", 15, 12.0, 0.0, 6.0, 56.56),
    ("G20", 15, 12.0, 0.0, 6.0, 56.56),
    ("G21", 15, 155.0, -50.0, 80.0, 12.39),
    ("G22", 16, 155.0, -50.0, 80.0, 12.39),
    ("G23", 18, 400.0, -50.0, 200.0, 4.42),
    ("G24", 21, 400.0, -50.0, 200.0, 4.42),
    ("G25", 22, 50.0, -10.0, 16.0, 1e-4),
    ("G26", 22, 50.0, -10.0, 16.0, 1e-4),
    ("G27", 22, 50.0, -10.0, 16.0, 1e-4),
    ("G28", 22, 50.0, -10.0, 16.0, 1e-4),
    ("G29", 22, 50.0, -10.0, 16.0, 1e-4),
    ("G30", 22, 50.0, -10.0, 16.0, 1e-4),
    ("G31", 23, 155.0, -50.0, 80.0, 12.39),
    ("G32", 23, 155.0, -50.0, 80.0, 12.39),
    ("G33", 23, 350.0, -25.0, 150.0, 11.85),
)

# area, absolute bus, pmax MW, wind profile
WIND_FARMS = (
    (1, 117, 113.5, "DK1"),
    (1, 122, 56.75, "DK1"),
    (1, 122, 56.75, "DK1"),
    (1, 124, 113.5, "DK1"),
    (2, 201, 17.03, "DK2"),
    (2, 212, 8.51, "DK2"),
    (2, 212, 8.52, "DK2"),
    (3, 301, 34.05, "SE1"),
    (3, 301, 34.05, "SE1"),
    (3, 315, 68.1, "SE1"),
    (3, 317, 68.1, "SE1"),
    (3, 324, 68.1, "SE1"),
    (4, 401, 17.25, "SE4"),
    (4, 401, 17.25, "SE4"),
    (4, 413, 34.05, "SE4"),
    (4, 422, 34.05, "SE4"),
)

# id, local from, local to, r, x, b, rating MVA, transformer ratio (0 = line)
LINES = (
    ("C01", 1, 2, 0.003, 0.014, 0.461, 175.0, 0.0),
    ("L01", 1, 3, 0.055, 0.211, 0.057, 175.0, 0.0),
    ("L02", 1, 5, 0.022, 0.085, 0.023, 175.0, 0.0),
    ("L03", 2, 4, 0.033, 0.127, 0.034, 175.0, 0.0),
    ("L04", 2, 6, 0.050, 0.192, 0.052, 175.0, 0.0),
    ("L05", 3, 9, 0.031, 0.119, 0.032, 175.0, 0.0),
    ("T01", 3, 24, 0.002, 0.084, 0.000, 400.0, 1.03),
    ("L06", 4, 9, 0.027, 0.104, 0.028, 175.0, 0.0),
    ("L07", 5, 10, 0.023, 0.088, 0.024, 175.0, 0.0),
    ("C02", 6, 10, 0.014, 0.061, 2.459, 175.0, 0.0),
    ("L08", 7, 8, 0.016, 0.061, 0.017, 175.0, 0.0),
    ("L09", 8, 9, 0.043, 0.165, 0.045, 175.0, 0.0),
    ("L10", 8, 10, 0.043, 0.165, 0.045, 175.0, 0.0),
    ("T02", 9, 11, 0.002, 0.084, 0.000, 400.0, 1.03),
    ("T03", 9, 12, 0.002, 0.084, 0.000, 400.0, 1.03),
    ("T04", 10, 11, 0.002, 0.084, 0.000, 400.0, 1.02),
    ("T05", 10, 12, 0.002, 0.084, 0.000, 400.0, 1.02),
    ("L11", 11, 13, 0.006, 0.048, 0.100, 500.0, 0.0),
    ("L12", 11, 14, 0.005, 0.042, 0.088, 500.0, 0.0),
    ("L13", 12, 13, 0.006, 0.048, 0.100, 500.0, 0.0),
    ("L14", 12, 23, 0.012, 0.097, 0.203, 500.0, 0.0),
    ("L15", 13, 23, 0.011, 0.087, 0.182, 500.0, 0.0),
    ("L16", 14, 16, 0.005, 0.039, 0.082, 500.0, 0.0),
    ("L17", 15, 16, 0.002, 0.017, 0.036, 500.0, 0.0),
    ("L18", 15, 21, 0.006, 0.049, 0.103, 500.0, 0.0),
    ("L19", 15, 21, 0.006, 0.049, 0.103, 500.0, 0.0),
    ("L20", 15, 24, 0.007, 0.052, 0.109, 500.0, 0.0),
    ("L21", 16, 17, 0.003, 0.026, 0.055, 500.0, 0.0),
    ("L22", 16, 19, 0.003, 0.023, 0.049, 500.0, 0.0),
    ("L23", 17, 18, 0.002, 0.014, 0.030, 500.0, 0.0),
    ("L24", 17, 22, 0.014, 0.105, 0.221, 500.0, 0.0),
    ("L25", 18, 21, 0.003, 0.026, 0.055, 500.0, 0.0),
    ("L26", 18, 21, 0.003, 0.026, 0.055, 500.0, 0.0),
    ("L27", 19, 20, 0.005, 0.040, 0.083, 500.0, 0.0),
    ("L28", 19, 20, 0.005, 0.040, 0.083, 500.0, 0.0),
    ("L29", 20, 23, 0.003, 0.022, 0.046, 500.0, 0.0),
    ("L30", 20, 23, 0.003, 0.022, 0.046, 500.0, 0.0),
    ("L31", 21, 22, 0.009, 0.068, 0.142, 500.0, 0.0),
)

# id, from bus, to bus, r, x, b, rating MVA
AC_TIES = (
    ("AC01", 222, 317, 0.013, 0.104, 0.218, 500.0),
    ("AC02-1", 307, 403, 0.042, 0.161, 0.044, 175.0),
    ("AC02-2", 313, 415, 0.010, 0.075, 0.158, 500.0),
    ("AC02-3", 323, 417, 0.010, 0.074, 0.155, 500.0),
)

# id, from bus, to bus, r, a_inv, a_rec, b, c, rating MW
HVDC_LINKS = (
    ("DC01", 106, 203, 0.0080, 0.0005, 0.0003, 0.0007, 0.0074, 80.0),
    ("DC02", 123, 323, 0.0036, 0.0056, 0.0019, 0.0013, 0.0015, 400.0),
    ("DC03", 121, 422, 0.0037, 0.0049, 0.0019, 0.0012, 0.0015, 600.0),
)

UTILITY_FACTORS = (1.8, 0.95, 1.0, 1.1)
COST_FACTORS = (0.97, 1.03, 1.0, 0.99)
BASE_MVA = 100.0
SLACK_BUS = 113

# Half-month periods: (RES, IND, COM); row 4 is Feb 15 - Feb 28.
YEARLY_PROFILE = (
    (0.620, 0.731, 0.683),
    (0.560, 0.700, 0.620),
    (0.524, 0.692, 0.601),
    (0.490, 0.710, 0.630),
    (0.476, 0.769, 0.654),
    (0.500, 0.787, 0.730),
    (0.571, 0.792, 0.774),
    (0.620, 0.820, 0.790),
    (0.643, 0.862, 0.824),
    (0.720, 0.890, 0.860),
    (0.857, 0.940, 0.940),
    (0.910, 0.960, 0.950),
    (0.952, 0.962, 0.940),
    (0.955, 0.975, 0.947),
    (0.976, 0.977, 0.955),
    (0.999, 0.992, 0.980),
    (1.000, 1.000, 1.000),
    (0.940, 0.930, 0.900),
    (0.730, 0.820, 0.780),
    (0.580, 0.810, 0.753),
    (0.550, 0.846, 0.740),
    (0.570, 0.820, 0.680),
    (0.610, 0.754, 0.660),
    (0.615, 0.740, 0.670),
)

# Hour h covers h..h+1: (RES, IND, COM)
DAILY_PROFILE = (
    (0.600, 0.150, 0.040),
    (0.480, 0.140, 0.050),
    (0.420, 0.110, 0.060),
    (0.380, 0.090, 0.070),
    (0.350, 0.100, 0.080),
    (0.360, 0.115, 0.090),
    (0.400, 0.220, 0.110),
    (0.460, 0.350, 0.140),
    (0.510, 0.620, 0.170),
    (0.530, 0.850, 0.200),
    (0.530, 0.900, 0.280),
    (0.540, 0.880, 0.380),
    (0.580, 0.870, 0.500),
    (0.560, 0.910, 0.560),
    (0.540, 0.950, 0.670),
    (0.550, 0.960, 0.850),
    (0.610, 0.820, 0.870),
    (0.830, 0.600, 0.870),
    (0.960, 0.420, 0.890),
    (1.000, 0.370, 0.850),
    (0.950, 0.380, 0.700),
    (0.900, 0.310, 0.600),
    (0.790, 0.190, 0.450),
    (0.810, 0.160, 0.220),
)
