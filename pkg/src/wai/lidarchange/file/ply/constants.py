"""
Keywords of the PLY header.
"""
MAGIC = "ply"
FORMAT_ASCII = "format ascii 1.0"
END_HEADER = "end_header"
ELEMENT_KEYWORD = "element"
PROPERTY_KEYWORD = "property"
COMMENT_KEYWORD = "comment"
OBJ_INFO_KEYWORD = "obj_info"
VERTEX_ELEMENT = "vertex"

# Comment used to carry the frame tag of a cloud
FRAME_ID_COMMENT = "frame_id"

# Vertex property names
X, Y, Z, INTENSITY = "x", "y", "z", "intensity"

# Second token of a list property declaration
LIST_KEYWORD = "list"
