#!/usr/bin/env python3
"""Builds data/sample_bundle.json, data/toy_resource.json and data/sample_vectors.txt.

The bundle is authored here as Python tables because most inflected forms are
regular; irregular forms are spelled out where they occur.
"""

import json
import random
import sys
import unicodedata
from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent
DATA = ROOT / "data"

ENTRIES = {}   # (lang, lemma) -> entry dict
CLASS_TAGS = {}


def nfc(s):
    return unicodedata.normalize("NFC", s)


def add_entry(e):
    key = (e["language"], e["lemma"])
    if key in ENTRIES:
        old = ENTRIES[key]
        if old["forms"] != e["forms"] or old.get("gender") != e.get("gender"):
            sys.exit(f"conflicting entry for {key}")
        return old
    ENTRIES[key] = e
    return e


# --- Spanish ------------------------------------------------------------------

STRIP_ACCENT = str.maketrans("áéíóú", "aeiou")


def es_plural(word):
    if " " in word:
        # Multiword nouns inflect their head: "sala de baile", "agua salada".
        parts = word.split(" ")
        if parts[1] in ("de", "a"):
            return " ".join([es_plural(parts[0])] + parts[1:])
        return " ".join(es_plural(p) for p in parts)
    last = word[-1]
    if last in "aeiouáéó":
        return word + "s"
    if last == "z":
        return word[:-1] + "ces"
    if last == "s" and word[-2] not in "áéíóú":
        return word
    stem = word
    if len(word) > 2 and word[-2] in "áéíóú":
        stem = word[:-2] + word[-2].translate(STRIP_ACCENT) + word[-1]
    return stem + "es"


def es_n(lemma, gender, pl=None, sg_only=False, pl_only=False, proper=False, stressed_a=False):
    forms = {}
    if pl_only:
        forms["sg"] = None
        forms["pl"] = pl or es_plural(lemma)
    else:
        forms["sg"] = lemma
        if not sg_only and not proper:
            forms["pl"] = pl or es_plural(lemma)
    e = {"lemma": lemma, "language": "es", "pos": "noun", "gender": gender, "forms": forms}
    if proper:
        e["proper"] = True
    if stressed_a:
        e["stressed_a"] = True
    return add_entry(e)


def es_a(lemma, polarity=None, f=None):
    if lemma.endswith("o"):
        fem = lemma[:-1] + "a"
    elif lemma.endswith("or"):
        fem = lemma + "a"
    else:
        fem = lemma
    fem = f or fem
    forms = {"sg.m": lemma, "sg.f": fem, "pl.m": es_plural(lemma), "pl.f": es_plural(fem)}
    e = {"lemma": lemma, "language": "es", "pos": "adjective", "gender": "n/a", "forms": forms}
    if polarity:
        e["polarity"] = polarity
    return add_entry(e)


# --- French -------------------------------------------------------------------

def fr_n(lemma, gender, pl=None, sg_only=False, pl_only=False, proper=False, vowel=None):
    forms = {}
    if pl_only:
        forms["sg"] = None
        forms["pl"] = pl or lemma
    else:
        forms["sg"] = lemma
        if not sg_only and not proper:
            forms["pl"] = pl or (lemma if lemma[-1] in "sxz" else lemma + "s")
    e = {"lemma": lemma, "language": "fr", "pos": "noun", "gender": gender, "forms": forms}
    if proper:
        e["proper"] = True
    if vowel is not None:
        e["vowel_initial"] = vowel
    return add_entry(e)


# --- German -------------------------------------------------------------------

def de_n(lemma, gender, gen=None, pl=None, pl_dat=None, weak=False, compound=None,
         sg_only=False, pl_only=False, proper=False):
    forms = {}
    if pl_only:
        forms["sg"] = None
        forms["pl"] = pl
        if pl_dat:
            forms["pl.dat"] = pl_dat
    else:
        forms["sg"] = lemma
        if weak:
            oblique = gen
            forms["sg.gen"] = oblique
            forms["sg.dat"] = oblique
            forms["sg.acc"] = oblique
        elif gen:
            forms["sg.gen"] = gen
        if pl and not sg_only:
            forms["pl"] = pl
            forms["pl.dat"] = pl_dat or (pl if pl.endswith("n") or pl.endswith("s") else pl + "n")
    e = {"lemma": lemma, "language": "de", "pos": "noun", "gender": gender, "forms": forms}
    if proper:
        e["proper"] = True
    if compound:
        e["compound_form"] = compound
    return add_entry(e)


def de_a(lemma, polarity=None):
    forms = {"sg": lemma + "e", "sg.acc.m": lemma + "en", "sg.dat": lemma + "en",
             "sg.gen": lemma + "en", "pl": lemma + "en"}
    e = {"lemma": lemma, "language": "de", "pos": "adjective", "gender": "n/a", "forms": forms}
    if polarity:
        e["polarity"] = polarity
    return add_entry(e)


# --- schema helpers -------------------------------------------------------------

def cand(entry, number=None):
    if number is None:
        return entry["lemma"]
    return {"lemma": entry["lemma"], "number": number}


def prep(p, det="any", number=None, case=None, classes=None, closing=False):
    r = {"kind": "prepositional", "preposition": p, "determiner": det}
    if number:
        r["number"] = number
    if case:
        r["case"] = case
    if classes:
        r["classes"] = classes
    if closing:
        r["closing"] = True
    return r


def gen_r(det="required-definite", classes=None):
    r = {"kind": "genitive", "determiner": det, "case": "genitive"}
    if classes:
        r["classes"] = classes
    return r


def slot(index, role, members, realizations, requires=None, paired=None):
    out = {"index": index, "role": role, "realizations": realizations,
           "classes": list(members.keys()), "members": members}
    if requires:
        out["requires"] = requires
    if paired:
        out["paired"] = paired
    return out


def sense(sid, gloss, slots, order=None, head_number=None, co=None, chn=None):
    s = {"id": sid, "gloss": gloss, "slots": slots, "order": order or [x["index"] for x in slots]}
    if head_number:
        s["head_number"] = head_number
    if co:
        s["co_restrictions"] = [{"head": h, "slot": sl, "filler": f} for h, sl, f in co]
    if chn:
        s["class_head_number"] = [{"slot": sl, "class": c, "head": h} for sl, c, h in chn]
    return s


NOUNS = {"es": {}, "fr": {}, "de": {}}


def noun(lang, lemma, *senses):
    NOUNS[lang][lemma] = {"senses": list(senses)}


def tag_members():
    for lang, by_lemma in NOUNS.items():
        for body in by_lemma.values():
            for s in body["senses"]:
                for sl in s["slots"]:
                    for cls, items in sl["members"].items():
                        for it in items:
                            lemma = it if isinstance(it, str) else it["lemma"]
                            if (lang, lemma) not in ENTRIES:
                                sys.exit(f"member without entry: {lang} {lemma}")
                            tags = CLASS_TAGS.setdefault((lang, lemma), [])
                            if cls not in tags:
                                tags.append(cls)


# --- roles ----------------------------------------------------------------------

ROLES = [
    ("agente", "agentive-affected", "Aquel/aquello que realiza una acción"),
    ("afectado", "agentive-affected", "Aquel/aquello afectado"),
    ("no_afectado", "agentive-affected", "Aquel/aquello no afectado"),
    ("tema", "agentive-affected", "Aquel/aquello no afectado: Tema"),
    ("poseedor", "agentive-affected", "Aquel/aquello que tiene o dispone de algo"),
    ("experimentante", "agentive-affected", "Aquel/aquello que experimenta un estado"),
    ("experimentante_cambio", "agentive-affected", "Aquel/aquello que experimenta un nuevo estado"),
    ("existente", "agentive-affected", "Aquel/aquello que existe o es"),
    ("resultado", "agentive-affected", "Aquel/aquello que resulta/comienza/finaliza"),
    ("origen_causa", "agentive-affected", "Aquel/aquello que es el origen o la causa"),
    ("localizacion_abstracta", "agentive-affected", "Aquel/aquello que es una localización abstracta"),
    ("objetivo", "agentive-affected", "Aquel/aquello que es objetivo no espacial"),
    ("clasificativo", "classificative-situative", "Clasificativo"),
    ("extension", "classificative-situative", "Extensión"),
    ("situacion", "classificative-situative", "Situación: Locación y Tiempo"),
    ("locacion_origen", "classificative-situative", "Locación: Origen"),
    ("locacion_paso", "classificative-situative", "Locación: Paso"),
    ("locacion_direccion", "classificative-situative", "Locación: Dirección"),
]

# --- ontology -------------------------------------------------------------------

GLOSS = {
    "material": "material",
    "material.sustancia": "sustancia",
    "material.sustancia.liquido_no_consumible": "líquido no consumible",
    "material.sustancia.liquido_consumible_bebible": "líquido consumible bebible",
    "material.sustancia.excremento": "excremento",
    "material.sustancia.emanacion": "emanación",
    "material.sustancia.combustible": "combustible",
    "material.sustancia.aroma": "aroma",
    "lugar": "lugar",
    "lugar.construccion": "construcción",
    "lugar.construccion.habitacion": "habitación",
    "lugar.construccion.edificio": "edificio",
    "lugar.residencia": "residencia",
    "lugar.residencia.vivienda": "vivienda",
    "lugar.poblacion": "población",
    "lugar.poblacion.ciudad": "ciudad",
    "lugar.poblacion.pais": "país",
    "animado": "animado",
    "animado.humano": "humano",
    "animado.humano.familia": "familia",
    "animado.humano.edad": "edad",
    "animado.humano.parte_del_cuerpo": "parte del cuerpo",
    "animado.humano.organo": "órgano",
    "animado.humano.musculo_hueso": "músculos y huesos",
    "animado.humano.cargo": "cargo",
    "animado.humano.profesion": "profesión",
    "animado.humano.condicion_humana": "condición humana",
    "animado.humano.condicion_negativa": "condición humana negativa",
    "animado.humano.nombre_propio": "nombre propio",
    "animado.humano.personaje_historico": "personaje histórico",
    "animado.humano.institucion": "institución",
    "animado.animal": "animal",
    "animado.animal.mamifero": "mamífero",
    "animado.animal.parte_del_cuerpo": "parte del cuerpo",
    "animado.criatura_ficcion": "criatura de ficción",
    "proceso": "proceso",
    "proceso.natural": "natural",
    "proceso.natural.patologico": "patológico",
    "proceso.natural.biologico": "biológico",
    "proceso.humano": "humano",
    "proceso.humano.medico": "médico",
    "proceso.humano.violencia": "violencia",
    "proceso.humano.comunicacion": "comunicación",
    "proceso.cambio": "cambio",
    "proceso.cambio.motricidad": "motricidad",
    "estado": "estado",
    "estado.fisico": "estado físico",
    "estado.animico": "estado anímico",
    "intelectual": "intelectual",
    "intelectual.area_conocimiento": "área de conocimiento",
    "intelectual.contenido_general": "contenido general",
    "situacion": "situación",
    "situacion.social": "social",
    "situacion.social.problema": "problema",
    "situacion.social.perdida": "pérdida",
    "tiempo": "tiempo",
    "tiempo.duracion": "duración",
    "tiempo.mes": "mes",
    "tiempo.periodo": "periodo",
    "tiempo.perspectiva": "perspectiva",
}

CONNOTATION = {"material.sustancia.excremento": "unpleasant"}
EXAMPLE = {
    "material.sustancia.liquido_no_consumible": "aguarrás",
    "lugar.construccion.habitacion": "habitación",
}


# ================================================================================
# Spanish
# ================================================================================

# olor ------------------------------------------------------------------------
liq_no = [es_n(w, g, sg_only=True, stressed_a=sa) for w, g, sa in [
    ("aguarrás", "masc", False), ("pesticida", "masc", False), ("espray", "masc", False),
    ("agua oxigenada", "fem", True), ("cicuta", "fem", False), ("alcohol", "masc", False),
    ("resina", "fem", False), ("lejía", "fem", False), ("agua salada", "fem", True),
    ("suavizante", "masc", False), ("disolvente", "masc", False), ("insecticida", "masc", False)]]
liq_bebible = [es_n(w, g, sg_only=True) for w, g in [
    ("vino", "masc"), ("café", "masc"), ("leche", "fem"), ("cerveza", "fem")]]
excr = [es_n("excremento", "masc"), es_n("orina", "fem", sg_only=True)]
emanacion = [es_n(w, g, sg_only=True) for w, g in [("humedad", "fem"), ("humo", "masc"), ("moho", "masc")]]
habitacion = [es_n("solana", "fem"), es_n("buhardilla", "fem"), es_n("campanario", "masc"),
              es_n("sala de baile", "fem"), es_n("anfiteatro", "masc"), es_n("zaguán", "masc"),
              es_n("desván", "masc"), es_n("habitación", "fem"), es_n("sala de billar", "fem"),
              es_n("aseo", "masc"), es_n("trastero", "masc"), es_n("urinario", "masc"),
              es_n("compartimento", "masc"), es_n("vestíbulo", "masc"), es_n("antecámara", "fem"),
              es_n("clase", "fem")]
vivienda = [es_n("casa", "fem"), es_n("piso", "masc"), es_n("cabaña", "fem")]

noun("es", "olor", sense(
    "olfato", "Impresión que producen en el olfato las emanaciones de los cuerpos",
    [slot(1, "origen_causa", {
        "material.sustancia.liquido_no_consumible": [cand(e, "singular") for e in liq_no],
        "material.sustancia.liquido_consumible_bebible": [cand(e, "singular") for e in liq_bebible],
        "material.sustancia.excremento": [cand(excr[0]), cand(excr[1], "singular")],
        "material.sustancia.emanacion": [cand(e, "singular") for e in emanacion],
    }, [prep("a", "forbidden", "per-candidate"), prep("de", "forbidden", "per-candidate")]),
     slot(2, "situacion", {
         "lugar.construccion.habitacion": [cand(e) for e in habitacion],
         "lugar.residencia.vivienda": [cand(e) for e in vivienda],
     }, [prep("de")])]))
es_n("olor", "masc")

# muerte ----------------------------------------------------------------------
edad = [es_n("niño", "masc"), es_n("niña", "fem"), es_n("anciano", "masc"), es_n("bebé", "masc")]
familia_es = [es_n("madre", "fem"), es_n("padre", "masc"), es_n("abuelo", "masc"), es_n("hermano", "masc")]
patol_muerte = [es_n("intoxicación alimentaria", "fem", pl="intoxicaciones alimentarias"),
                es_n("infarto", "masc"), es_n("cáncer", "masc", pl="cánceres"), es_n("neumonía", "fem")]
estado_fisico = {w: es_n(w, g, sg_only=True, stressed_a=sa) for w, g, sa in [
    ("desnutrición", "fem", False), ("enfermedad", "fem", False), ("hambre", "fem", True),
    ("inanición", "fem", False), ("sed", "fem", False), ("libido", "fem", False), ("salud", "fem", False)]}

noun("es", "muerte", sense(
    "fallecimiento", "Cesación o término de la vida",
    [slot(1, "afectado", {
        "animado.humano.edad": [cand(e) for e in edad],
        "animado.humano.familia": [cand(e) for e in familia_es],
    }, [prep("de")]),
     slot(2, "origen_causa", {
         "proceso.natural.patologico": [cand(e) for e in patol_muerte],
         "estado.fisico": [cand(estado_fisico[w], "singular")
                           for w in ["desnutrición", "enfermedad", "hambre", "inanición", "sed"]],
     }, [prep("por", "forbidden", "per-candidate", classes=["proceso.natural.patologico"]),
         prep("de", "forbidden", "per-candidate", classes=["estado.fisico"])])],
    co=[("plural", 1, "plural"), ("singular", 2, "singular")]))
es_n("muerte", "fem")

# texto -----------------------------------------------------------------------
periodistas = [es_n("periodista", "masc"), es_n("médico", "masc"), es_n("escritora", "fem")]
noun("es", "texto", sense(
    "escrito", "Enunciado o conjunto coherente de enunciados escritos",
    [slot(1, "agente", {"animado.humano.profesion": [cand(e) for e in periodistas]}, [prep("de")]),
     slot(2, "tema", {"estado.fisico": [cand(estado_fisico[w], "singular") for w in
                                        ["desnutrición", "enfermedad", "hambre", "inanición", "sed",
                                         "libido", "salud"]]},
          [prep("sobre", "any", "per-candidate")])]))
es_n("texto", "masc")

# dolor -----------------------------------------------------------------------
mamifero = [es_n("animal de carga", "masc", pl="animales de carga"), es_n("caballo", "masc"),
            es_n("perro", "masc")]
cargo = [es_n("diplomática", "fem"), es_n("diplomático", "masc"), es_n("embajador", "masc")]
profesion_dolor = [es_n("soldador", "masc"), es_n("minero", "masc"), es_n("bailarina", "fem")]
cond_humana = [es_n("competidor", "masc"), es_n("atleta", "masc"), es_n("corredora", "fem")]
cond_neg = [es_n("enfermo", "masc"), es_n("enferma", "fem"), es_n("paciente", "masc"),
            es_n("herido", "masc")]
medico = [es_n("intervención", "fem"), es_n("operación", "fem"), es_n("inyección", "fem")]
violencia = [es_n("pelea", "fem"), es_n("agresión", "fem"), es_n("tortura", "fem")]
biologico = [es_n("alumbramiento", "masc"), es_n("parto", "masc"), es_n("ovulación", "fem")]
motricidad = [es_n("golpe", "masc"), es_n("caída", "fem"), es_n("esfuerzo", "masc")]
patol_dolor = [es_n("peritonitis", "fem"), es_n("neuralgia", "fem"), es_n("cólico", "masc")]

parte_cuerpo = [
    (es_n("cabeza", "fem"), "singular"), (es_n("espalda", "fem"), "singular"),
    (es_n("cuello", "masc"), "singular"), (es_n("barriga", "fem"), "singular"),
    (es_n("pecho", "masc"), "singular"), (es_n("garganta", "fem"), "singular"),
    (es_n("diente", "masc"), "plural"), (es_n("muela", "fem"), "plural"),
    (es_n("diente molar", "masc", pl="dientes molares"), "both"),
    (es_n("oído", "masc"), "both"), (es_n("pierna", "fem"), "both"), (es_n("pie", "masc"), "both"),
    (es_n("mano", "fem"), "both"), (es_n("muñeca", "fem"), "both"), (es_n("tobillo", "masc"), "both"),
    (es_n("antebrazo", "masc"), "both"),
]
organo = [(es_n("ovario", "masc"), "both"), (es_n("estómago", "masc"), "singular"),
          (es_n("aparato digestivo", "masc", pl="aparatos digestivos"), "singular"),
          (es_n("riñón", "masc"), "both"), (es_n("hígado", "masc"), "singular")]
musculo_hueso = [(es_n("hueso", "masc"), "plural"), (es_n("músculo", "masc"), "plural"),
                 (es_n("articulación", "fem"), "plural")]
animal_parte = [(es_n("maxilar", "masc"), "both"), (es_n("pezuña", "fem"), "plural"),
                (es_n("hocico", "masc"), "singular")]

perdida = [es_n("pérdida", "fem"), es_n("ausencia", "fem"), es_n("separación", "fem")]
viuda = [es_n("viuda", "fem"), es_n("huérfano", "masc")]

noun("es", "dolor",
     sense("sensacion_fisica", "Sensación molesta y aflictiva de una parte del cuerpo",
           [slot(1, "experimentante", {
               "animado.animal.mamifero": [cand(e) for e in mamifero],
               "animado.humano.cargo": [cand(e) for e in cargo],
               "animado.humano.profesion": [cand(e) for e in profesion_dolor],
               "animado.humano.condicion_humana": [cand(e) for e in cond_humana],
               "animado.humano.condicion_negativa": [cand(e) for e in cond_neg],
           }, [prep("de")]),
            slot(2, "origen_causa", {
                "proceso.humano.medico": [cand(e) for e in medico],
                "proceso.humano.violencia": [cand(e) for e in violencia],
                "proceso.natural.biologico": [cand(e) for e in biologico],
                "proceso.cambio.motricidad": [cand(e) for e in motricidad],
                "proceso.natural.patologico": [cand(e) for e in patol_dolor],
            }, [prep("de")]),
            slot(3, "situacion", {
                "animado.humano.parte_del_cuerpo": [cand(e, n) for e, n in parte_cuerpo],
                "animado.humano.organo": [cand(e, n) for e, n in organo],
                "animado.humano.musculo_hueso": [cand(e, n) for e, n in musculo_hueso],
                "animado.animal.parte_del_cuerpo": [cand(e, n) for e, n in animal_parte],
            }, [prep("de", "forbidden", "per-candidate"),
                prep("de", "required-definite", closing=True),
                {"kind": "adjectival"}])],
           order=[3, 1, 2]),
     sense("sentimiento", "Sentimiento de pena y congoja",
           [slot(1, "experimentante", {
               "animado.humano.familia": [cand(e) for e in familia_es],
               "animado.humano.condicion_negativa": [cand(e) for e in viuda],
           }, [prep("de")]),
            slot(2, "origen_causa", {"situacion.social.perdida": [cand(e) for e in perdida]},
                 [prep("por")])]))
es_n("dolor", "masc")

# pregunta --------------------------------------------------------------------
alumnos = [es_n("alumno", "masc"), es_n("estudiante", "masc"), es_n("profesor", "masc"),
           es_n("periodista", "masc")]
areas = [es_n("anatomía", "fem", sg_only=True), es_n("aerodinámica", "fem", sg_only=True),
         es_n("física", "fem", sg_only=True), es_n("historia", "fem", sg_only=True),
         es_n("mecánica", "fem", sg_only=True), es_n("onomástica", "fem", sg_only=True)]
contenido = [es_n("regla gramatical", "fem", pl="reglas gramaticales"), es_n("ortografía", "fem", sg_only=True)]
ciudades_es = {w: es_n(w, "fem", proper=True) for w in
               ["Montevideo", "Madrid", "Lisboa", "Berlín", "París", "Santiago"]}
paises_es = {w: es_n(w, "masc", proper=True) for w in ["Brasil", "Irak"]}
ficcion = [es_n("Don Quijote", "masc", proper=True), es_n("Sancho Panza", "masc", proper=True)]
historicos = [es_n("Marco Polo", "masc", proper=True), es_n("Cervantes", "masc", proper=True)]

noun("es", "pregunta", sense(
    "interrogacion", "Interrogación que se hace para que alguien responda",
    [slot(1, "agente", {"animado.humano.profesion": [cand(e) for e in alumnos]}, [prep("de")]),
     slot(2, "tema", {
         "intelectual.area_conocimiento": [cand(e, "singular") for e in areas],
         "intelectual.contenido_general": [cand(contenido[0], "plural"), cand(contenido[1], "singular")],
         "lugar.poblacion.ciudad": [cand(ciudades_es["Montevideo"])],
         "animado.criatura_ficcion": [cand(e) for e in ficcion],
         "lugar.poblacion.pais": [cand(paises_es["Brasil"])],
         "animado.humano.personaje_historico": [cand(e) for e in historicos],
     }, [prep("de", "forbidden", "per-candidate", classes=["intelectual.area_conocimiento"]),
         prep("sobre", "forbidden", "per-candidate")])]))
es_n("pregunta", "fem")

# respuesta -------------------------------------------------------------------
agentes_resp = [es_n("alumno", "masc"), es_n("profesor", "masc"), es_n("militar", "masc"),
                es_n("presidente", "masc"), es_n("padre", "masc"), es_n("rector", "masc")]
nombres = {w: es_n(w, "masc", proper=True) for w in ["Mario", "Antonio", "Pedro", "Juan"]}
objetivos = [es_n("pregunta", "fem"), es_n("propuesta", "fem"), es_n("estudiante", "masc")]
instituciones = [es_n("universidad", "fem")]
problemas = [es_n("situación", "fem"), es_n("problema", "masc"), es_n("huelga", "fem")]
contenidos_resp = [es_n("acepción", "fem"), es_n("proceso", "masc")]

noun("es", "respuesta", sense(
    "contestacion", "Contestación a una pregunta, duda o dificultad",
    [slot(1, "agente", {
        "animado.humano.profesion": [cand(e) for e in agentes_resp],
        "animado.humano.nombre_propio": [cand(nombres["Mario"])],
    }, [prep("de")]),
     slot(2, "objetivo", {
         "intelectual.contenido_general": [cand(e) for e in objetivos[:2]],
         "animado.humano.condicion_humana": [cand(objetivos[2])],
         "animado.humano.nombre_propio": [cand(nombres["Antonio"])],
         "animado.humano.institucion": [cand(e) for e in instituciones],
     }, [prep("a")]),
     slot(3, "tema", {
         "situacion.social.problema": [cand(e) for e in problemas],
         "intelectual.contenido_general": [cand(e) for e in contenidos_resp],
         "lugar.poblacion.pais": [cand(paises_es["Irak"])],
         "intelectual.area_conocimiento": [cand(areas[4], "singular"), cand(areas[5], "singular")],
     }, [prep("sobre", classes=["situacion.social.problema", "intelectual.contenido_general",
                                 "lugar.poblacion.pais"]),
         prep("sobre", "forbidden", "per-candidate", classes=["intelectual.area_conocimiento"])])]))
es_n("respuesta", "fem")

# estancia --------------------------------------------------------------------
turistas = [es_n("turista", "masc"), es_n("estudiante", "masc")]
edificios = [es_n("hotel", "masc"), es_n("hospital", "masc")]
noun("es", "estancia", sense(
    "permanencia", "Permanencia durante cierto tiempo en un lugar determinado",
    [slot(1, "existente", {
        "animado.humano.nombre_propio": [cand(nombres["Pedro"]), cand(nombres["Juan"])],
        "animado.humano.condicion_humana": [cand(e) for e in turistas],
    }, [prep("de")]),
     slot(2, "situacion", {
         "lugar.residencia.vivienda": [cand(e) for e in vivienda],
         "lugar.construccion.edificio": [cand(e) for e in edificios],
         "lugar.poblacion.ciudad": [cand(ciudades_es[w]) for w in ["Madrid", "Lisboa"]],
     }, [prep("en")])]))
es_n("estancia", "fem")

# viaje -----------------------------------------------------------------------
noun("es", "viaje", sense(
    "desplazamiento", "Traslado que se hace de una parte a otra",
    [slot(1, "agente", {
        "animado.humano.nombre_propio": [cand(nombres["Mario"]), cand(nombres["Pedro"])],
        "animado.humano.profesion": [cand(es_n("presidente", "masc"))],
        "animado.humano.condicion_humana": [cand(turistas[0])],
    }, [prep("de")]),
     slot(2, "locacion_origen", {"lugar.poblacion.ciudad": [cand(ciudades_es[w]) for w in ["Madrid", "Lisboa"]]},
          [prep("desde")]),
     slot(3, "locacion_direccion", {"lugar.poblacion.ciudad": [cand(ciudades_es[w]) for w in
                                                               ["Berlín", "París", "Santiago"]]},
          [prep("a")])]))
es_n("viaje", "masc")

# Spanish adjectives used in frames and annotations ------------------------------
es_a("agradable", "pleasant")
es_a("desagradable", "unpleasant")
for a in ["intenso", "fuerte", "penetrante", "breve", "distinto", "insuficiente", "inesperado",
          "general", "interesante", "repentino", "agudo", "leve", "insoportable", "agotador",
          "rápido"]:
    es_a(a)

ARG3_ADJ = [
    ("estomacal", "animado.humano.organo"), ("abdominal", "animado.humano.parte_del_cuerpo"),
    ("lumbar", "animado.humano.parte_del_cuerpo"), ("muscular", "animado.humano.musculo_hueso"),
    ("articular", "animado.humano.musculo_hueso"), ("dental", "animado.humano.parte_del_cuerpo"),
    ("cervical", "animado.humano.parte_del_cuerpo"), ("torácico", "animado.humano.parte_del_cuerpo"),
    ("intestinal", "animado.humano.organo"), ("gástrico", "animado.humano.organo"),
    ("renal", "animado.humano.organo"), ("hepático", "animado.humano.organo"),
    ("óseo", "animado.humano.musculo_hueso"), ("dorsal", "animado.humano.parte_del_cuerpo"),
    ("pélvico", "animado.humano.parte_del_cuerpo"), ("ocular", "animado.humano.organo"),
    ("auricular", "animado.humano.parte_del_cuerpo"), ("facial", "animado.humano.parte_del_cuerpo"),
    ("mandibular", "animado.humano.musculo_hueso"), ("craneal", "animado.humano.musculo_hueso"),
    ("costal", "animado.humano.musculo_hueso"), ("intercostal", "animado.humano.musculo_hueso"),
    ("plantar", "animado.humano.parte_del_cuerpo"), ("rectal", "animado.humano.organo"),
    ("uterino", "animado.humano.organo"), ("ovárico", "animado.humano.organo"),
    ("testicular", "animado.humano.organo"), ("inguinal", "animado.humano.parte_del_cuerpo"),
    ("cardíaco", "animado.humano.organo"), ("pectoral", "animado.humano.parte_del_cuerpo"),
    ("femoral", "animado.humano.musculo_hueso"), ("vertebral", "animado.humano.musculo_hueso"),
    ("espinal", "animado.humano.musculo_hueso"), ("visceral", "animado.humano.organo"),
    ("epigástrico", "animado.humano.organo"), ("bucal", "animado.humano.parte_del_cuerpo"),
    ("faríngeo", "animado.humano.organo"), ("nasal", "animado.humano.parte_del_cuerpo"),
    ("tendinoso", "animado.humano.musculo_hueso"), ("perineal", "animado.humano.parte_del_cuerpo"),
    ("mamario", "animado.humano.organo"), ("escapular", "animado.humano.musculo_hueso"),
    ("lumbosacro", "animado.humano.musculo_hueso"), ("dentario", "animado.humano.parte_del_cuerpo"),
    ("orofacial", "animado.humano.parte_del_cuerpo"),
]
ARG2_ADJ = [("neuropático", "proceso.natural.patologico"), ("postoperatorio", "proceso.humano.medico"),
            ("inflamatorio", "proceso.natural.patologico"), ("traumático", "proceso.cambio.motricidad"),
            ("menstrual", "proceso.natural.biologico"), ("oncológico", "proceso.natural.patologico"),
            ("isquémico", "proceso.natural.patologico")]
ARG1_ADJ = [("infantil", "animado.humano.condicion_humana")]
POST_NONSPECIFIC = [
    "crónico", "físico", "agudo", "intenso", "leve", "insoportable", "persistente", "punzante",
    "constante", "intermitente", "repentino", "lacerante", "terrible", "moderado", "severo",
    "profundo", "sordo", "difuso", "localizado", "generalizado", "continuo", "recurrente", "ligero",
    "tremendo", "insufrible", "atroz", "horrible", "extraño", "súbito", "transitorio", "permanente",
    "irradiado", "opresivo", "pulsátil", "quemante", "penetrante", "paroxístico", "residual",
    "brutal", "espantoso", "extremo", "importante", "inexplicable", "ocasional", "mínimo",
    "fantasma", "fuerte",
]
PRE_NONSPECIFIC = [
    "fuerte", "grande", "terrible", "intenso", "leve", "ligero", "profundo", "agudo", "tremendo",
    "insoportable", "horrible", "enorme", "pequeño", "constante", "inmenso", "verdadero", "auténtico",
    "primer", "mismo", "único", "extraño", "repentino", "súbito", "sordo", "punzante", "lacerante",
    "brutal", "atroz", "espantoso", "insufrible", "vivo", "tenue", "suave", "débil", "persistente",
    "continuo", "creciente", "agudísimo", "fortísimo", "intensísimo", "ligerísimo", "levísimo",
    "terrible", "infinito", "hondo", "cierto", "nuevo", "viejo", "antiguo", "eterno", "largo",
    "breve", "súbito", "inesperado", "inexplicable", "inevitable", "indescriptible", "increíble",
    "espantoso", "insufrible", "penoso", "amargo", "triste", "lento", "rápido", "sutil", "vago",
    "difuso", "molesto", "incómodo", "dichoso", "maldito", "condenado", "famoso", "conocido",
    "habitual", "frecuente", "ocasional", "raro", "leve", "típico", "clásico", "característico",
    "inusual", "extremo", "máximo", "mínimo", "menor", "mayor", "peor", "posible", "supuesto",
    "probable", "eventual", "primero", "último", "segundo", "tercer", "otro", "cualquier",
    "semejante", "tal", "dicho", "mencionado", "anterior", "posterior", "actual", "reciente",
    "terrible",
]


def unique(xs):
    out = []
    for x in xs:
        if x not in out:
            out.append(x)
    return out


PRE_NONSPECIFIC = unique(PRE_NONSPECIFIC)[:100]
assert len(ARG3_ADJ) == 45 and len({a for a, _ in ARG3_ADJ}) == 45
assert len(ARG2_ADJ) == 7 and len(ARG1_ADJ) == 1
assert len(POST_NONSPECIFIC) == 47 and len(set(POST_NONSPECIFIC)) == 47, len(POST_NONSPECIFIC)
assert len(PRE_NONSPECIFIC) == 100, len(PRE_NONSPECIFIC)
all_post = [a for a, _ in ARG3_ADJ] + [a for a, _ in ARG2_ADJ] + [a for a, _ in ARG1_ADJ] + POST_NONSPECIFIC
assert len(set(all_post)) == 100

for a, _ in ARG3_ADJ:
    es_a(a)

# ================================================================================
# French
# ================================================================================

familia_fr = [fr_n("nourrisson", "masc"), fr_n("nouveau-né", "masc", pl="nouveau-nés"),
              fr_n("nouveau-née", "fem", pl="nouveau-nées"), fr_n("enfant", "masc"),
              fr_n("épouse", "fem"), fr_n("oncle", "masc")]
patol_fr = [(fr_n("infection", "fem"), "singular"),
            (fr_n("complications infectieuses", "fem", pl_only=True), "plural"),
            (fr_n("complications chirurgicales", "fem", pl_only=True), "plural"),
            (fr_n("complications cardiaques", "fem", pl_only=True), "plural"),
            (fr_n("éclampsie", "fem", sg_only=True), "singular"),
            (fr_n("pneumonie", "fem"), "singular"), (fr_n("sepsis", "masc", sg_only=True), "singular"),
            (fr_n("tuberculose", "fem", sg_only=True), "singular"),
            (fr_n("botulisme", "masc", sg_only=True), "singular")]
noun("fr", "mort", sense(
    "deces", "Cessation définitive de la vie",
    [slot(1, "afectado", {"animado.humano.familia": [cand(e) for e in familia_fr]}, [prep("de")]),
     slot(2, "origen_causa", {"proceso.natural.patologico": [cand(e, n) for e, n in patol_fr]},
          [prep("par", "forbidden", "per-candidate")])],
    co=[("plural", 1, "plural")]))
fr_n("mort", "fem")

aromas_fr = [fr_n("essence", "fem", sg_only=True), fr_n("café", "masc", sg_only=True),
             fr_n("tabac", "masc", sg_only=True), fr_n("lavande", "fem", sg_only=True),
             fr_n("encens", "masc", sg_only=True), fr_n("humidité", "fem", sg_only=True, vowel=True)]
pieces_fr = [fr_n("cuisine", "fem"), fr_n("grenier", "masc"), fr_n("cave", "fem"),
             fr_n("atelier", "masc"), fr_n("église", "fem")]
villes_fr = [fr_n("Paris", "masc", proper=True), fr_n("Marseille", "fem", proper=True)]
noun("fr", "odeur", sense(
    "olfaction", "Émanation perçue par l'odorat",
    [slot(1, "origen_causa", {"material.sustancia.aroma": [cand(e, "singular") for e in aromas_fr]},
          [prep("de", "forbidden", "per-candidate")]),
     slot(2, "situacion", {"lugar.construccion.habitacion": [cand(e) for e in pieces_fr],
                           "lugar.poblacion.ciudad": [cand(e) for e in villes_fr]},
          [prep("de")])],
    chn=[(2, "lugar.poblacion.ciudad", "plural")]))
fr_n("odeur", "fem")

exp_fr = [fr_n("patient", "masc"), fr_n("patiente", "fem"), fr_n("malade", "masc"),
          fr_n("enfant", "masc"), fr_n("athlète", "masc")]
corps_fr = [fr_n("tête", "fem"), fr_n("dos", "masc"), fr_n("dent", "fem"), fr_n("ventre", "masc"),
            fr_n("genou", "masc", pl="genoux"), fr_n("épaule", "fem")]
noun("fr", "douleur", sense(
    "sensation_physique", "Sensation pénible ressentie dans une partie du corps",
    [slot(1, "experimentante", {"animado.humano.condicion_negativa": [cand(e) for e in exp_fr]},
          [prep("de")]),
     slot(2, "situacion", {"animado.humano.parte_del_cuerpo": [cand(e) for e in corps_fr]},
          [prep("à", "required-definite")])],
    order=[2, 1]))
fr_n("douleur", "fem")

# ================================================================================
# German
# ================================================================================

fragesteller = [de_n("Studentin", "fem", pl="Studentinnen"),
                de_n("Student", "masc", gen="Studenten", pl="Studenten", weak=True),
                de_n("Lehrer", "masc", gen="Lehrers", pl="Lehrer", pl_dat="Lehrern"),
                de_n("Journalist", "masc", gen="Journalisten", pl="Journalisten", weak=True)]
teilnehmer = [de_n("Teilnehmer", "masc", gen="Teilnehmers", pl="Teilnehmer", pl_dat="Teilnehmern",
                   compound="Teilnehmer"),
              de_n("Besucher", "masc", gen="Besuchers", pl="Besucher", pl_dat="Besuchern",
                   compound="Besucher"),
              de_n("Zuschauer", "masc", gen="Zuschauers", pl="Zuschauer", pl_dat="Zuschauern",
                   compound="Zuschauer")]
probleme_de = [de_n("Arbeitslosigkeit", "fem", sg_only=True), de_n("Armut", "fem", sg_only=True),
               de_n("Inflation", "fem", sg_only=True)]
inhalte_de = [de_n("Ergebnis", "neut", gen="Ergebnisses", pl="Ergebnisse"),
              de_n("Weg", "masc", gen="Weges", pl="Wege"),
              de_n("Preis", "masc", gen="Preises", pl="Preise")]
perspektive = [de_n("Zukunft", "fem", sg_only=True, compound="Zukunfts"),
               de_n("Vergangenheit", "fem", sg_only=True, compound="Vergangenheits")]
noun("de", "Frage", sense(
    "erkundigung", "Äußerung, mit der sich jemand an jemanden wendet, um etwas zu erfahren",
    [slot(1, "agente", {"animado.humano.profesion": [cand(e) for e in fragesteller],
                        "animado.humano.condicion_humana": [cand(e) for e in teilnehmer]},
          [gen_r(), prep("von", case="dative"),
           {"kind": "compound", "classes": ["animado.humano.condicion_humana"]}]),
     slot(2, "tema", {"situacion.social.problema": [cand(e, "singular") for e in probleme_de],
                      "intelectual.contenido_general": [cand(e) for e in inhalte_de],
                      "tiempo.perspectiva": [cand(e, "singular") for e in perspektive]},
          [prep("nach", case="dative", classes=["intelectual.contenido_general", "tiempo.perspectiva"]),
           gen_r(classes=["situacion.social.problema", "intelectual.contenido_general"]),
           {"kind": "compound", "classes": ["tiempo.perspectiva"]}])]))
de_n("Frage", "fem", pl="Fragen")

fluechtende = [de_n("Häftling", "masc", gen="Häftlings", pl="Häftlinge"),
               de_n("Familie", "fem", pl="Familien"),
               de_n("König", "masc", gen="Königs", pl="Könige")]
staedte_de = {w: de_n(w, "neut", proper=True) for w in
              ["Madrid", "Berlin", "Paris", "Santiago", "Lissabon", "Wien"]}
laender_de = [de_n("Amerika", "neut", proper=True), de_n("Spanien", "neut", proper=True)]
noun("de", "Flucht", sense(
    "entkommen", "Das Fliehen vor einer Gefahr",
    [slot(1, "agente", {"animado.humano.condicion_humana": [cand(e) for e in fluechtende]}, [gen_r()]),
     slot(2, "locacion_origen", {"lugar.poblacion.ciudad": [cand(staedte_de[w]) for w in
                                                            ["Madrid", "Berlin", "Paris"]]},
          [prep("von", case="dative")], requires=[3]),
     slot(3, "locacion_direccion", {"lugar.poblacion.ciudad": [cand(staedte_de[w]) for w in
                                                               ["Santiago", "Lissabon", "Wien"]],
                                    "lugar.poblacion.pais": [cand(e) for e in laender_de]},
          [prep("nach", case="dative")])],
    head_number="singular-only"))
de_n("Flucht", "fem", sg_only=True)

gaeste = [de_n("Präsident", "masc", gen="Präsidenten", pl="Präsidenten", weak=True),
          de_n("Tourist", "masc", gen="Touristen", pl="Touristen", weak=True),
          de_n("Studentin", "fem", pl="Studentinnen")]
gebaeude = [de_n("Hotel", "neut", gen="Hotels", pl="Hotels"),
            de_n("Krankenhaus", "neut", gen="Krankenhauses", pl="Krankenhäuser")]
dauer = [de_n("2 Tage", "masc", pl_only=True, pl="2 Tage", pl_dat="2 Tagen"),
         de_n("3 Tage", "masc", pl_only=True, pl="3 Tage", pl_dat="3 Tagen"),
         de_n("2 Wochen", "fem", pl_only=True, pl="2 Wochen")]
monate = [de_n(w, "masc", sg_only=True) for w in ["November", "Dezember", "Januar", "Juli"]]
perioden = [de_n("Jahr", "neut", gen="Jahres", pl="Jahre", compound="Jahres"),
            de_n("Monat", "masc", gen="Monats", pl="Monate", compound="Monats"),
            de_n("Woche", "fem", pl="Wochen", compound="Wochen")]
noun("de", "Aufenthalt", sense(
    "verweilen", "Das Sichaufhalten an einem Ort für eine bestimmte Zeit",
    [slot(1, "existente", {"animado.humano.cargo": [cand(gaeste[0])],
                           "animado.humano.condicion_humana": [cand(gaeste[1])],
                           "animado.humano.profesion": [cand(gaeste[2])]}, [gen_r()]),
     slot(2, "situacion", {"lugar.poblacion.ciudad": [cand(staedte_de[w]) for w in ["Berlin", "Madrid", "Wien"]],
                           "lugar.construccion.edificio": [cand(e) for e in gebaeude]},
          [prep("in", case="dative")]),
     slot(3, "extension", {"tiempo.duracion": [cand(e, "plural") for e in dauer],
                           "tiempo.mes": [cand(e, "singular") for e in monate],
                           "tiempo.periodo": [cand(e, "singular") for e in perioden]},
          [prep("von", "forbidden", "per-candidate", case="dative",
                classes=["tiempo.duracion", "tiempo.mes"]),
           {"kind": "adjectival", "classes": ["tiempo.duracion"]},
           {"kind": "compound", "classes": ["tiempo.periodo"]},
           {"kind": "apposition", "determiner": "forbidden", "number": "per-candidate",
            "classes": ["tiempo.duracion"], "filler_first": True}],
          paired={"preposition": "bis", "case": "dative", "determiner": "forbidden",
                  "classes": ["tiempo.mes"]})]))
de_n("Aufenthalt", "masc", gen="Aufenthalts", pl="Aufenthalte")

patienten = [de_n("Patient", "masc", gen="Patienten", pl="Patienten", weak=True),
             de_n("Patientin", "fem", pl="Patientinnen"),
             de_n("Kind", "neut", gen="Kindes", pl="Kinder")]
koerper = [de_n("Kopf", "masc", gen="Kopfes", pl="Köpfe", compound="Kopf"),
           de_n("Rücken", "masc", gen="Rückens", pl="Rücken", compound="Rücken"),
           de_n("Zahn", "masc", gen="Zahnes", pl="Zähne", compound="Zahn"),
           de_n("Bauch", "masc", gen="Bauches", pl="Bäuche", compound="Bauch"),
           de_n("Brust", "fem", pl="Brüste", compound="Brust"),
           de_n("Knie", "neut", gen="Knies", pl="Knie", pl_dat="Knien", compound="Knie")]
ursachen = [de_n("Operation", "fem", pl="Operationen"),
            de_n("Sturz", "masc", gen="Sturzes", pl="Stürze"),
            de_n("Unfall", "masc", gen="Unfalls", pl="Unfälle")]
noun("de", "Schmerz", sense(
    "koerperlich", "Unangenehme körperliche Empfindung",
    [slot(1, "experimentante", {"animado.humano.condicion_negativa": [cand(e) for e in patienten]},
          [gen_r(), prep("von", case="dative")]),
     slot(2, "origen_causa", {"proceso.humano.medico": [cand(ursachen[0])],
                              "proceso.cambio.motricidad": [cand(e) for e in ursachen[1:]]},
          [prep("nach", case="dative")]),
     slot(3, "situacion", {"animado.humano.parte_del_cuerpo": [cand(e) for e in koerper]},
          [prep("in", "required-definite", case="dative"), {"kind": "compound"}])],
    order=[1, 3, 2]))
de_n("Schmerz", "masc", gen="Schmerzes", pl="Schmerzen", pl_dat="Schmerzen")

for a in ["lustig", "interessant", "unerwartet", "wichtig", "lang", "kurz", "stark", "plötzlich"]:
    de_a(a)
for a in ["zweitägig", "dreitägig", "zweiwöchig"]:
    de_a(a)

# ================================================================================
# Frames
# ================================================================================

FRAMES = []


def opt(text=None, plural=None, adjective=None, prefix=None, requires=None):
    if text and not any([plural, adjective, prefix, requires]):
        return text
    o = {}
    if text:
        o["text"] = text
    if plural:
        o["plural_text"] = plural
    if adjective:
        o["adjective"] = adjective
        pol = ENTRIES[(CURRENT_LANG[0], adjective)].get("polarity")
        if pol:
            o["polarity"] = pol
    if prefix:
        o["prefix"] = prefix
    if requires:
        o["requires"] = [{"slot": s, "class": c} for s, c in requires]
    return o


CURRENT_LANG = ["es"]


def part(function, *options, np=False, preposition=None, case=None):
    p = {"function": function}
    if np:
        p["np_host"] = True
    if preposition:
        p["preposition"] = preposition
    if case:
        p["case"] = case
    if options:
        p["options"] = list(options)
    return p


def np_part(function, preposition=None, case=None):
    return part(function, np=True, preposition=preposition, case=case)


def frame(fid, lang, noun_lemma, sense_id, position, pattern, example, adjectives=None):
    f = {"id": fid, "language": lang, "noun": noun_lemma, "sense": sense_id,
         "verb_position": position, "pattern": pattern, "standard_example": example}
    if adjectives:
        f["np_adjectives"] = adjectives
    FRAMES.append(f)


CURRENT_LANG[0] = "es"
frame("es-olor-1", "es", "olor", "olfato", "before-np",
      [part("adverb", "Ahora", "Hoy"), part("subject", "Carlos", "Marta"),
       part("verb", "nota", "percibe"), np_part("direct-object")],
      "Ahora Carlos nota el olor a humedad de la casa.", ["intenso", "agradable", "desagradable"])
frame("es-olor-2", "es", "olor", "olfato", "before-np",
      [part("verb", opt("Se percibe", "Se perciben"), opt("Llega", "Llegan")), np_part("subject")],
      "Se percibe el olor a lejía del aseo.")
frame("es-olor-3", "es", "olor", "olfato", "after-np",
      [np_part("subject"), part("verb", opt("es", "son")),
       part("attribute", opt(adjective="intenso", prefix="muy"), opt(adjective="desagradable"),
            opt(adjective="agradable", requires=[(1, "material.sustancia.liquido_consumible_bebible")]))],
      "El olor a resina del desván es muy intenso.")
frame("es-olor-4", "es", "olor", "olfato", "after-np",
      [np_part("subject"), part("verb", opt("resulta", "resultan")),
       part("attribute", opt(adjective="penetrante"), opt(adjective="desagradable"))],
      "El olor a alcohol de la habitación resulta penetrante.")

frame("es-muerte-1", "es", "muerte", "fallecimiento", "before-np",
      [part("subject", "Nadie"), part("verb", "esperaba"), np_part("direct-object")],
      "Nadie esperaba la muerte del niño.")
frame("es-muerte-2", "es", "muerte", "fallecimiento", "before-np",
      [part("subject", "Los periódicos", "La radio"), part("verb", "anuncian", "confirman"),
       np_part("direct-object")],
      "Los periódicos anuncian la muerte del abuelo.")
frame("es-muerte-3", "es", "muerte", "fallecimiento", "after-np",
      [np_part("subject"), part("verb", opt("sorprende a todos", "sorprenden a todos"))],
      "La muerte de la madre sorprende a todos.")
frame("es-muerte-4", "es", "muerte", "fallecimiento", "after-np",
      [np_part("subject"), part("verb", opt("fue", "fueron")),
       part("attribute", opt(adjective="repentino"), opt(adjective="inesperado"))],
      "La muerte del anciano fue repentina.")

frame("es-texto-1", "es", "texto", "escrito", "before-np",
      [part("subject", "Ana", "Luis"), part("verb", "lee", "comenta"), np_part("direct-object")],
      "Ana lee el texto del periodista sobre el hambre.")
frame("es-texto-2", "es", "texto", "escrito", "before-np",
      [part("adverb", "Hoy", "Mañana"), part("verb", opt("aparece", "aparecen")), np_part("subject")],
      "Hoy aparece el texto de la escritora sobre la salud.")
frame("es-texto-3", "es", "texto", "escrito", "after-np",
      [np_part("subject"), part("verb", opt("resulta", "resultan")),
       part("attribute", opt(adjective="interesante"), opt(adjective="breve", prefix="muy"))],
      "El texto del médico sobre la desnutrición resulta interesante.")
frame("es-texto-4", "es", "texto", "escrito", "after-np",
      [np_part("subject"), part("verb", opt("circula", "circulan")), part("adverb", "ya", "todavía")],
      "El texto sobre la sed circula ya.")

frame("es-dolor-1", "es", "dolor", "sensacion_fisica", "before-np",
      [part("subject", "Ana", "El médico"), part("verb", "describe", "alivia"), np_part("direct-object")],
      "El médico alivia el dolor de cabeza de los enfermos.", ["intenso", "agudo", "leve"])
frame("es-dolor-2", "es", "dolor", "sensacion_fisica", "before-np",
      [part("adverb", "Ahora", "De repente"), part("verb", opt("aumenta", "aumentan")), np_part("subject")],
      "De repente aumenta el dolor de espalda del soldador.")
frame("es-dolor-3", "es", "dolor", "sensacion_fisica", "after-np",
      [np_part("subject"), part("verb", opt("es", "son")),
       part("attribute", opt(adjective="intenso", prefix="muy"), opt(adjective="insoportable"))],
      "El dolor de huesos de los competidores es insoportable.")
frame("es-dolor-4", "es", "dolor", "sensacion_fisica", "after-np",
      [np_part("subject"), part("verb", opt("desaparece", "desaparecen")), part("adverb", "pronto", "despacio")],
      "El dolor de dientes de la enferma desaparece pronto.")

frame("es-pregunta-1", "es", "pregunta", "interrogacion", "before-np",
      [part("subject", "Juan", "La decana"), part("verb", "responde", "repite"), np_part("direct-object")],
      "Juan responde la pregunta del alumno sobre Montevideo.", ["interesante", "inesperado"])
frame("es-pregunta-2", "es", "pregunta", "interrogacion", "before-np",
      [part("adverb", "Ahora", "Luego"), part("verb", opt("llega", "llegan")), np_part("subject")],
      "Luego llega la pregunta del profesor de anatomía.")
frame("es-pregunta-3", "es", "pregunta", "interrogacion", "after-np",
      [np_part("subject"), part("verb", opt("parece", "parecen")),
       part("attribute", opt(adjective="interesante"), opt(adjective="inesperado"))],
      "La pregunta del estudiante sobre Brasil parece interesante.")
frame("es-pregunta-4", "es", "pregunta", "interrogacion", "after-np",
      [np_part("subject"), part("verb", opt("queda", "quedan")), part("adverb", "sin respuesta")],
      "La pregunta sobre aerodinámica queda sin respuesta.")

frame("es-respuesta-1", "es", "respuesta", "contestacion", "before-np",
      [part("subject", "Pedro", "Juan"), part("verb", "evalúa", "entiende"), np_part("direct-object")],
      "Pedro evalúa la respuesta del alumno a la pregunta.", ["rápido"])
frame("es-respuesta-2", "es", "respuesta", "contestacion", "before-np",
      [part("adverb", "Ahora"), part("verb", opt("es", "son")),
       part("attribute", opt(adjective="distinto")), np_part("subject")],
      "Ahora es distinta la respuesta del profesor sobre la acepción.")
frame("es-respuesta-3", "es", "respuesta", "contestacion", "before-np",
      [part("adverb", "Rápidamente", "Finalmente"), part("verb", "busca", "entiende"), np_part("direct-object")],
      "Rápidamente busca la respuesta a Antonio sobre el problema.")
frame("es-respuesta-4", "es", "respuesta", "contestacion", "before-np",
      [part("subject", "La decana"), part("verb", "recibe"), part("adverb", "inmediatamente"),
       np_part("direct-object")],
      "La decana recibe inmediatamente la respuesta del rector sobre la huelga.")
frame("es-respuesta-5", "es", "respuesta", "contestacion", "after-np",
      [np_part("subject"), part("verb", opt("es", "son")), part("attribute", opt(adjective="breve", prefix="muy"))],
      "La respuesta de Mario a Antonio es muy breve.", ["rápido"])
frame("es-respuesta-6", "es", "respuesta", "contestacion", "after-np",
      [np_part("subject"), part("verb", opt("parece", "parecen")), part("attribute", opt(adjective="insuficiente"))],
      "La respuesta del presidente sobre Irak parece insuficiente.")
frame("es-respuesta-7", "es", "respuesta", "contestacion", "after-np",
      [np_part("subject"), part("verb", opt("resulta", "resultan")), part("attribute", opt(adjective="inesperado"))],
      "La respuesta del padre sobre mecánica resulta inesperada.")
frame("es-respuesta-8", "es", "respuesta", "contestacion", "after-np",
      [np_part("subject"), part("verb", opt("no es entonces", "no son entonces")),
       part("attribute", opt(adjective="distinto"))],
      "La respuesta a Antonio sobre onomástica no es entonces distinta.")

frame("es-estancia-1", "es", "estancia", "permanencia", "before-np",
      [part("subject", "Pedro", "La familia"), part("verb", "organiza", "prolonga"), np_part("direct-object")],
      "La familia organiza la estancia de Pedro en la casa.")
frame("es-estancia-2", "es", "estancia", "permanencia", "before-np",
      [part("adverb", "Mañana", "Hoy"), part("verb", opt("termina", "terminan")), np_part("subject")],
      "Mañana termina la estancia del turista en Lisboa.")
frame("es-estancia-3", "es", "estancia", "permanencia", "after-np",
      [np_part("subject"), part("verb", opt("dura", "duran")), part("adverb", "poco", "mucho")],
      "La estancia de Juan en el hotel dura poco.")
frame("es-estancia-4", "es", "estancia", "permanencia", "after-np",
      [np_part("subject"), part("verb", opt("resulta", "resultan")), part("attribute", opt(adjective="breve"))],
      "La estancia del estudiante en Madrid resulta breve.")

frame("es-viaje-1", "es", "viaje", "desplazamiento", "after-np",
      [np_part("subject"), part("verb", opt("termina", "terminan")), part("adverb", "así")],
      "El viaje de Mario a Berlín termina así.")
frame("es-viaje-2", "es", "viaje", "desplazamiento", "after-np",
      [np_part("subject"), part("verb", opt("dura", "duran")), part("adverb", "poco", "demasiado")],
      "El viaje del presidente a París dura poco.")
frame("es-viaje-3", "es", "viaje", "desplazamiento", "after-np",
      [np_part("subject"), part("verb", opt("resulta", "resultan")), part("attribute", opt(adjective="agotador"))],
      "El viaje del turista desde Madrid resulta agotador.")
frame("es-viaje-4", "es", "viaje", "desplazamiento", "after-np",
      [np_part("subject"), part("verb", opt("empieza", "empiezan")), part("adverb", "mañana", "hoy")],
      "El viaje de Pedro a Santiago empieza mañana.")

CURRENT_LANG[0] = "fr"
frame("fr-mort-1", "fr", "mort", "deces", "before-np",
      [part("subject", "Le rapport", "Le médecin"), part("verb", "confirme", "explique"), np_part("direct-object")],
      "Le rapport confirme la mort du nourrisson par infection.")
frame("fr-mort-2", "fr", "mort", "deces", "before-np",
      [part("subject", "On"), part("verb", "annonce"), np_part("direct-object")],
      "On annonce la mort de la nouveau-née par pneumonie.")
frame("fr-mort-3", "fr", "mort", "deces", "after-np",
      [np_part("subject"), part("verb", opt("bouleverse", "bouleversent")), part("adverb", "tout le monde")],
      "La mort du nouveau-né par éclampsie bouleverse tout le monde.")
frame("fr-mort-4", "fr", "mort", "deces", "after-np",
      [np_part("subject"), part("verb", opt("reste", "restent")), part("adverb", "un mystère")],
      "La mort du nourrisson par botulisme reste un mystère.")

frame("fr-odeur-1", "fr", "odeur", "olfaction", "before-np",
      [part("subject", "Je", "Marie"), part("verb", "sens", "reconnais"), np_part("direct-object")],
      "Je sens l'odeur d'essence de la cuisine.")
frame("fr-odeur-2", "fr", "odeur", "olfaction", "before-np",
      [part("adverb", "Soudain"), part("verb", opt("monte", "montent")), np_part("subject")],
      "Soudain monte l'odeur de café du grenier.")
frame("fr-odeur-3", "fr", "odeur", "olfaction", "after-np",
      [np_part("subject"), part("verb", opt("persiste", "persistent")), part("adverb", "longtemps")],
      "Les odeurs de Paris persistent longtemps.")
frame("fr-odeur-4", "fr", "odeur", "olfaction", "after-np",
      [np_part("subject"), part("verb", opt("envahit", "envahissent")), part("adverb", "tout")],
      "L'odeur de lavande de l'atelier envahit tout.")

frame("fr-douleur-1", "fr", "douleur", "sensation_physique", "before-np",
      [part("subject", "Le médecin"), part("verb", "soulage", "décrit"), np_part("direct-object")],
      "Le médecin soulage la douleur au dos du patient.")
frame("fr-douleur-2", "fr", "douleur", "sensation_physique", "before-np",
      [part("adverb", "Soudain"), part("verb", opt("apparaît", "apparaissent")), np_part("subject")],
      "Soudain apparaît la douleur à la tête de l'enfant.")
frame("fr-douleur-3", "fr", "douleur", "sensation_physique", "after-np",
      [np_part("subject"), part("verb", opt("disparaît", "disparaissent")), part("adverb", "vite")],
      "La douleur aux dents de la patiente disparaît vite.")
frame("fr-douleur-4", "fr", "douleur", "sensation_physique", "after-np",
      [np_part("subject"), part("verb", opt("augmente", "augmentent")), part("adverb", "la nuit")],
      "La douleur au genou de l'athlète augmente la nuit.")

CURRENT_LANG[0] = "de"
frame("de-frage-1", "de", "Frage", "erkundigung", "before-np",
      [part("adverb", "Heute"), part("verb", "beantwortet"), part("subject", "Maria", "Paul"),
       np_part("direct-object")],
      "Heute beantwortet Maria die Frage der Studentin.", ["lustig", "interessant", "unerwartet", "wichtig"])
frame("de-frage-2", "de", "Frage", "erkundigung", "before-np",
      [part("adverb", "Dann"), part("verb", "wiederholt"), part("subject", "Paul"), np_part("direct-object")],
      "Dann wiederholt Paul die Frage nach dem Ergebnis.")
frame("de-frage-3", "de", "Frage", "erkundigung", "after-np",
      [np_part("subject"), part("verb", opt("bleibt", "bleiben")), part("adverb", "offen")],
      "Die Frage der Arbeitslosigkeit bleibt offen.", ["wichtig"])
frame("de-frage-4", "de", "Frage", "erkundigung", "after-np",
      [np_part("subject"), part("verb", opt("überrascht", "überraschen")), part("adverb", "alle")],
      "Die unerwartete Frage nach dem Ergebnis überrascht alle.", ["unerwartet"])

frame("de-flucht-1", "de", "Flucht", "entkommen", "before-np",
      [part("subject", "Niemand"), part("verb", "erwartet"), np_part("direct-object")],
      "Niemand erwartet die Flucht des Königs.")
frame("de-flucht-2", "de", "Flucht", "entkommen", "before-np",
      [part("adverb", "Nachts"), part("verb", "beginnt"), np_part("subject")],
      "Nachts beginnt die Flucht von Madrid nach Santiago.")
frame("de-flucht-3", "de", "Flucht", "entkommen", "after-np",
      [np_part("subject"), part("verb", "gelingt"), part("adverb", "schließlich")],
      "Die Flucht von Madrid nach Santiago gelingt schließlich.")
frame("de-flucht-4", "de", "Flucht", "entkommen", "after-np",
      [np_part("subject"), part("verb", "dauert"), part("adverb", "lange")],
      "Die Flucht der Familie nach Amerika dauert lange.")

frame("de-aufenthalt-1", "de", "Aufenthalt", "verweilen", "before-np",
      [part("adverb", "Morgen"), part("verb", opt("beginnt", "beginnen")), np_part("subject")],
      "Morgen beginnt der Aufenthalt von 3 Tagen.")
frame("de-aufenthalt-2", "de", "Aufenthalt", "verweilen", "before-np",
      [part("adverb", "Jetzt"), part("verb", opt("endet", "enden")), np_part("subject")],
      "Jetzt endet der Aufenthalt des Präsidenten in Berlin.")
frame("de-aufenthalt-3", "de", "Aufenthalt", "verweilen", "after-np",
      [np_part("subject"), part("verb", opt("gefällt allen", "gefallen allen"))],
      "Der Aufenthalt von November bis Dezember gefällt allen.", ["lang", "kurz"])
frame("de-aufenthalt-4", "de", "Aufenthalt", "verweilen", "after-np",
      [np_part("subject"), part("verb", opt("vergeht", "vergehen")), part("adverb", "schnell")],
      "Der Jahresaufenthalt vergeht schnell.")

frame("de-schmerz-1", "de", "Schmerz", "koerperlich", "before-np",
      [part("adverb", "Plötzlich"), part("verb", opt("kommt", "kommen")), np_part("subject")],
      "Plötzlich kommt der Schmerz im Rücken.", ["stark", "plötzlich"])
frame("de-schmerz-2", "de", "Schmerz", "koerperlich", "before-np",
      [part("adverb", "Heute"), part("verb", opt("verschwindet", "verschwinden")), np_part("subject")],
      "Heute verschwindet der Kopfschmerz des Kindes.")
frame("de-schmerz-3", "de", "Schmerz", "koerperlich", "after-np",
      [np_part("subject"), part("verb", opt("vergeht", "vergehen")), part("adverb", "langsam")],
      "Der Schmerz des Patienten im Knie vergeht langsam.")
frame("de-schmerz-4", "de", "Schmerz", "koerperlich", "after-np",
      [np_part("subject"), part("verb", opt("wird", "werden")), part("adverb", "stärker")],
      "Der Schmerz im Bauch nach der Operation wird stärker.")

# ================================================================================
# Annotations and co-occurrence
# ================================================================================

ANNOTATIONS = [
    {"language": "es", "noun": "dolor", "sense": "sensacion_fisica", "position": "postnominal",
     "items": ([{"adjective": a, "label": "arg3", "class": c} for a, c in ARG3_ADJ] +
               [{"adjective": a, "label": "arg2", "class": c} for a, c in ARG2_ADJ] +
               [{"adjective": a, "label": "arg1", "class": c} for a, c in ARG1_ADJ] +
               [{"adjective": a, "label": "non-specific"} for a in POST_NONSPECIFIC])},
    {"language": "es", "noun": "dolor", "sense": "sensacion_fisica", "position": "prenominal",
     "items": [{"adjective": a, "label": "non-specific"} for a in PRE_NONSPECIFIC]},
    {"language": "de", "noun": "Aufenthalt", "sense": "verweilen", "position": "prenominal",
     "items": [{"adjective": "zweitägig", "label": "arg3", "class": "tiempo.duracion"},
               {"adjective": "dreitägig", "label": "arg3", "class": "tiempo.duracion"},
               {"adjective": "zweiwöchig", "label": "arg3", "class": "tiempo.duracion"},
               {"adjective": "lang", "label": "non-specific"},
               {"adjective": "kurz", "label": "non-specific"}]},
]

# Counts for the ranked prototypes come from the published table; the ranks in
# between (3-6, 8-12) and the tail are authored so the published ranks hold.
DOLOR_ARG3_COUNTS = [
    ("cabeza", 147678, "animado.humano.parte_del_cuerpo"),
    ("espalda", 29719, "animado.humano.parte_del_cuerpo"),
    ("estómago", 21530, "animado.humano.organo"),
    ("muela", 9872, "animado.humano.parte_del_cuerpo"),
    ("pecho", 6710, "animado.humano.parte_del_cuerpo"),
    ("garganta", 5120, "animado.humano.parte_del_cuerpo"),
    ("cuello", 3840, "animado.humano.parte_del_cuerpo"),
    ("oído", 3312, "animado.humano.parte_del_cuerpo"),
    ("pierna", 2860, "animado.humano.parte_del_cuerpo"),
    ("barriga", 2410, "animado.humano.parte_del_cuerpo"),
    ("muñeca", 1990, "animado.humano.parte_del_cuerpo"),
    ("tobillo", 1622, "animado.humano.parte_del_cuerpo"),
    ("ovario", 1491, "animado.humano.organo"),
    ("hueso", 1484, "animado.humano.musculo_hueso"),
    ("pie", 1203, "animado.humano.parte_del_cuerpo"),
    ("mano", 990, "animado.humano.parte_del_cuerpo"),
]
COOCCURRENCE = [
    {"language": "es", "noun": "dolor", "sense": "sensacion_fisica", "slot": 3,
     "counts": [{"lemma": l, "count": n, "class": c} for l, n, c in DOLOR_ARG3_COUNTS]},
]


# ================================================================================
# Assembly
# ================================================================================

def build_ontology():
    used = set()
    for by_lemma in NOUNS.values():
        for body in by_lemma.values():
            for s in body["senses"]:
                for sl in s["slots"]:
                    used.update(sl["classes"])
    for a in ANNOTATIONS:
        used.update(i["class"] for i in a["items"] if "class" in i)
    for t in COOCCURRENCE:
        used.update(c["class"] for c in t["counts"])
    ids = set()
    for c in used:
        parts = c.split(".")
        for k in range(1, len(parts) + 1):
            ids.add(".".join(parts[:k]))
    first_member = {}
    for lang in ["es", "fr", "de"]:
        for body in NOUNS[lang].values():
            for s in body["senses"]:
                for sl in s["slots"]:
                    for cls, items in sl["members"].items():
                        it = items[0]
                        first_member.setdefault(cls, it if isinstance(it, str) else it["lemma"])
    out = []
    for cid in sorted(ids):
        if cid not in GLOSS:
            sys.exit(f"no gloss for class {cid}")
        c = {"id": cid, "gloss": GLOSS[cid]}
        example = EXAMPLE.get(cid) or first_member.get(cid)
        if not example:
            example = next((first_member[k] for k in sorted(first_member) if k.startswith(cid + ".")), None)
        if example:
            c["example"] = example
        if cid in CONNOTATION:
            c["connotation"] = CONNOTATION[cid]
        out.append(c)
    return out


def build_entries():
    tag_members()
    out = []
    for (lang, lemma), e in ENTRIES.items():
        e = dict(e)
        tags = CLASS_TAGS.get((lang, lemma))
        if tags:
            e["classes"] = tags
        out.append(e)
    out.sort(key=lambda e: (e["language"], e["pos"], e["lemma"].lower(), e["lemma"]))
    return out


def build_bundle():
    entries = build_entries()
    return {
        "meta": {"name": "sample", "version": "1.0", "languages": ["es", "fr", "de"]},
        "roles": [{"id": i, "group": g, "gloss": {"es": gl}} for i, g, gl in ROLES],
        "ontology": build_ontology(),
        "entries": entries,
        "nouns": NOUNS,
        "frames": FRAMES,
        "adjective_annotations": ANNOTATIONS,
        "cooccurrence": COOCCURRENCE,
    }


TOY_RESOURCE = [
    {"lemma": "cabeza", "language": "es", "class": "animado.humano.parte_del_cuerpo", "gender": "fem",
     "forms": {"sg": "cabeza", "pl": "cabezas"}, "hypernyms": ["parte del cuerpo"]},
    {"lemma": "espalda", "language": "es", "class": "animado.humano.parte_del_cuerpo", "gender": "fem",
     "forms": {"sg": "espalda", "pl": "espaldas"}, "hypernyms": ["parte del cuerpo"]},
    {"lemma": "hombro", "language": "es", "class": "animado.humano.parte_del_cuerpo", "gender": "masc",
     "forms": {"sg": "hombro", "pl": "hombros"}, "hypernyms": ["parte del cuerpo"], "synonyms": []},
    {"lemma": "rodilla", "language": "es", "class": "animado.humano.parte_del_cuerpo", "gender": "fem",
     "forms": {"sg": "rodilla", "pl": "rodillas"}, "hypernyms": ["parte del cuerpo"]},
    {"lemma": "salud", "language": "es", "gender": "fem", "forms": {"sg": "salud"},
     "hypernyms": ["parte del cuerpo"], "synonyms": ["cabeza"]},
    {"lemma": "codo", "language": "es", "class": "animado.humano.musculo_hueso", "gender": "masc",
     "forms": {"sg": "codo", "pl": "codos"}, "hypernyms": ["parte del cuerpo"]},
]


def build_vectors(bundle):
    # Synthetic space: each word is its top-level class direction plus a
    # second-level offset and seeded noise, so same-class words sit together.
    dim = 24
    rng = random.Random(20231)
    roots = sorted({c["id"].split(".")[0] for c in bundle["ontology"]})
    seconds = sorted({".".join(c["id"].split(".")[:2]) for c in bundle["ontology"] if "." in c["id"]})
    base = {}
    for i, r in enumerate(roots):
        v = [0.0] * dim
        v[i % dim] = 1.0
        base[r] = v
    for j, s in enumerate(seconds):
        v = [0.0] * dim
        v[(len(roots) + j) % dim] = 0.6
        base[s] = v
    rows = []
    for e in bundle["entries"]:
        v = [rng.gauss(0.0, 0.15) for _ in range(dim)]
        for cls in e.get("classes", []):
            parts = cls.split(".")
            for k in (1, 2):
                key = ".".join(parts[:k])
                if key in base:
                    v = [a + b for a, b in zip(v, base[key])]
        rows.append((e["lemma"].replace(" ", "_"), v))
    for by_lemma in bundle["nouns"].values():
        for lemma in by_lemma:
            v = [rng.gauss(0.0, 0.3) for _ in range(dim)]
            rows = [(l, x) for l, x in rows if l != lemma] + [(lemma, v)]
    seen = {}
    for l, v in rows:
        seen[l] = v
    lines = [f"{len(seen)} {dim}"]
    for l, v in seen.items():
        lines.append(l + " " + " ".join(f"{x:.5f}" for x in v))
    return "\n".join(lines) + "\n"


def main():
    bundle = build_bundle()
    DATA.mkdir(exist_ok=True)
    text = json.dumps(bundle, ensure_ascii=False, indent=1)
    (DATA / "sample_bundle.json").write_text(nfc(text) + "\n", encoding="utf-8")
    (DATA / "toy_resource.json").write_text(
        nfc(json.dumps(TOY_RESOURCE, ensure_ascii=False, indent=1)) + "\n", encoding="utf-8")
    (DATA / "sample_vectors.txt").write_text(nfc(build_vectors(bundle)), encoding="utf-8")


if __name__ == "__main__":
    main()
