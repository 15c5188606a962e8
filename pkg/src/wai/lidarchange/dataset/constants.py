"""
File names of a sequence directory.
"""
MAP_FILENAME = "map.ply"
FRAMES_DIRECTORY = "frames"
TRUTH_DIRECTORY = "truth"
POSES_FILENAME = "poses.csv"
PATH_FILENAME = "path.csv"
SCENE_FILENAME = "scene.properties"

# Per-frame files are named by zero-padded frame index
FRAME_NAME_FORMAT = "{:04d}"

POSES_HEADER = ["frame",
                "r00", "r01", "r02", "r10", "r11", "r12", "r20", "r21", "r22",
                "tx", "ty", "tz",
                "odometer"]
TRUTH_HEADER = ["point", "label"]
PATH_HEADER = ["x", "y"]
